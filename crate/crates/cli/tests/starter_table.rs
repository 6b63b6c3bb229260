//! The bundled table must match `starter_table()`. Regenerate with
//! `EULERSUM_BLESS=1 cargo test -p eulersum-cli --test starter_table`.

use std::path::Path;

use eulersum_core::reduction::starter_table;

#[test]
fn bundled_starter_table_is_current() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tables/starter.jsonl");
    let expected = starter_table().to_jsonl();
    if std::env::var_os("EULERSUM_BLESS").is_some() {
        std::fs::write(&path, &expected).unwrap();
        return;
    }
    let actual = std::fs::read_to_string(&path).unwrap();
    assert!(
        actual == expected,
        "tables/starter.jsonl is stale; rerun with EULERSUM_BLESS=1"
    );
}
