//! The oracle sweeps at the full ranges the module invariants call for.

use schur_codes::verify;

fn assert_passes(report: verify::SuiteReport) {
    assert!(
        report.passed(),
        "{} failed {} of {} checks: {:?}",
        report.name,
        report.failures.len(),
        report.checks,
        report.failures
    );
}

#[test]
fn codes_sweep_weight_12() {
    assert_passes(verify::verify_codes(12));
}

#[test]
fn bernstein_sweep_weight_7() {
    assert_passes(verify::verify_bernstein(7));
}

#[test]
fn qvertex_sweep_weight_8() {
    assert_passes(verify::verify_qvertex(8));
}

#[test]
fn lr_sweep_weight_8() {
    // Includes the power-sum route: the projection of
    // schur_in_p(mu) * schur_in_p(nu) equals the code-walk product.
    assert_passes(verify::verify_lr(8));
}

#[test]
fn q_projection_sweep_weight_8() {
    assert_passes(verify::verify_q_projection(8));
}
