//! The acceptance gate: one criterion per test, each printing a single
//! PASS/FAIL line (visible with `--nocapture`) and failing the test run
//! on any FAIL. The whole target completes in well under five minutes.

use cubical_sets::report::{CheckRecord, Status, SuiteConfig};
use cubical_sets::verify;

fn gate(criterion: &str, records: Vec<CheckRecord>) {
    assert!(!records.is_empty(), "criterion produced no checks");
    let failures: Vec<&CheckRecord> = records
        .iter()
        .filter(|r| r.status != Status::Pass)
        .collect();
    if failures.is_empty() {
        println!("PASS: {criterion} ({} checks)", records.len());
    } else {
        println!("FAIL: {criterion} ({} of {} checks)", failures.len(), records.len());
        panic!(
            "{criterion}: {:?}",
            failures
                .iter()
                .map(|r| format!("{}[{}] witness={}", r.theorem, r.instance, r.witness))
                .collect::<Vec<_>>()
        );
    }
}

fn cfg() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn criterion_01_cube_laws() {
    // associativity and identity over all composable triples with dims <= 2,
    // and hom-set cardinalities (m+2)^n for m, n <= 4
    gate("cube category laws and hom counts", verify::cube_suite(&cfg()));
}

#[test]
fn criterion_02_adjunction_bijections() {
    // global sections after constant is the identity for |Z| <= 4, and both
    // adjunction bijections checked exhaustively on a small corpus
    gate("adjoint-triple bijections", verify::adjunction_suite(&cfg()));
}

#[test]
fn criterion_03_delta_preservation() {
    // the constant functor preserves products, coproducts, pullbacks and
    // interval exponentials up to constructed iso on 50 seeded instances
    gate("constant-functor preservation", verify::delta_preservation_suite(&cfg()));
}

#[test]
fn criterion_04_naturality_squares_are_pullbacks() {
    // >= 100 generated monos with point lifts, every square at dims <= 2
    // is a pullback; plus the documented negative control without lifts
    gate("naturality squares of monos-with-lifts", verify::natsquare_suite(&cfg()));
}

#[test]
fn criterion_05_internalisation_reconstructs() {
    // the classifying map is natural and pulls the constant classifier
    // back to the original mono, on the same corpus
    gate("classifier internalisation", verify::internalise_suite(&cfg()));
}

#[test]
fn criterion_06_negation_suite() {
    // negation of a map is a mono (200 instances); the two computations of
    // the negated subobject agree and invert membership at level 0 (200
    // instances); every stable h-prop in the corpus classifies and equals
    // its own double negation
    let c = cfg();
    gate("negation is monic", verify::negmono_suite(&c));
    gate("negation pointwise agreement", verify::negpoints_suite(&c));
    gate("stable h-prop classification", verify::negneg_classifier_suite(&c));
}

#[test]
fn criterion_07_section_transfer() {
    // 50 fiberwise-codiscrete h-props over constant bases: the relative
    // codiscrete projection is an h-prop, its section exists and transfers
    // to a verified section on global sections
    gate("section transfer over constant bases", verify::transfer_suite(&cfg()));
}

#[test]
fn criterion_08_reals_roundtrips() {
    // cut/cocut transformer roundtrip consistency on 100 random query
    // pairs per sample real, and closedness probing with depth 50
    gate("located cut / cocut roundtrips", verify::reals_suite(&cfg()));
}

#[test]
fn criterion_09_decision_families() {
    // decision families cross-checked against direct comparison; promised
    // double-negation elimination; finite-index extraction on 20 witnesses
    gate("cocut decision families and extraction", verify::pi01_suite(&cfg()));
}

#[test]
fn criterion_10_machine_certificates() {
    // T/U soundness and completeness on 20 hand-assembled programs over
    // inputs 0..9 with fuel 10^5; per-point agreement passes on the
    // positive examples and fails on the documented mismatch
    gate("machine certificates and agreement", verify::ect_suite(&cfg()));
}
