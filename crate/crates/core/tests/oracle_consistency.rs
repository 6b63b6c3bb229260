use eulersum_core::expansion::expand_theorem1;
use eulersum_core::index::{indices_of_weight, SignFilter};
use eulersum_core::numerics::{eval_euler_sum, Evaluator};

#[test]
fn expansion_matches_direct_summation_up_to_weight_eight() {
    let ev = Evaluator::new(1e-12).unwrap();
    let mut checked = 0;
    let mut worst = 0.0f64;
    for w in 2..=8 {
        for idx in indices_of_weight(w, SignFilter::Any, 3) {
            let expansion = expand_theorem1(&idx).unwrap();
            let symbolic = ev.lincomb(&expansion).unwrap();
            let direct = eval_euler_sum(&idx, 1e-10).unwrap();
            assert!(
                symbolic.agrees_with(&direct, 0.0),
                "{idx}: {} vs {} (bounds {:e} + {:e})",
                symbolic.to_f64(),
                direct.to_f64(),
                symbolic.tail_bound,
                direct.tail_bound
            );
            worst = worst.max(symbolic.discrepancy(&direct));
            checked += 1;
        }
    }
    assert!(checked > 500, "only {checked} indices");
    assert!(worst < 1e-24, "worst discrepancy {worst:e}");
}
