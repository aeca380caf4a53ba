mod support;

#[test]
fn nbe_is_idempotent() {
    support::nbe_idempotent().unwrap();
}

#[test]
fn nbe_agrees_with_reference_evaluator() {
    support::nbe_matches_reference().unwrap();
}

#[test]
fn conversion_is_symmetric_and_transitive() {
    support::conv_symmetric_transitive().unwrap();
}

#[test]
fn normal_forms_preserve_types() {
    support::preservation().unwrap();
}

#[test]
fn universe_subsumption_is_monotone() {
    support::subsumption_monotone().unwrap();
}

#[test]
fn strong_mode_accepts_more() {
    support::strong_mode_monotone().unwrap();
}

#[test]
fn print_then_parse_round_trips() {
    support::round_trip().unwrap();
}
