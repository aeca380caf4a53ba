//! Hand unfolding of the successor clause for the first three stages of SST,
//! written as the printer lays terms out.

fn fin(n: usize) -> String {
    let mut parts = vec!["Unit"; n];
    parts.push("Empty");
    parts.join(" + ")
}

/// `lt n a b` after unfolding the recursion on `n`. Binders that end up unused
/// print as `_`.
fn lt(n: usize, a: &str, b: &str) -> String {
    assert!(n > 0);
    let inner = if n == 1 { "Empty".to_owned() } else { lt(n - 1, "x'", "y'") };
    let (x, y) = if n == 1 { ("_", "_") } else { ("x'", "y'") };
    format!(
        "sumElim (\\_. U 0) (\\_. sumElim (\\_. U 0) (\\_. Empty) (\\_. Unit) {b}) \
         (\\{x}. sumElim (\\_. U 0) (\\_. Empty) (\\{y}. {inner}) {b}) {a}"
    )
}

/// `Delta 1 2`, with its bound variable renamed past the enclosing `x`.
fn delta_1_2() -> String {
    format!(
        "(f : {} -> {}) * ((x1 : {}) -> (y : {}) -> {} -> {})",
        fin(1),
        fin(2),
        fin(1),
        fin(1),
        lt(1, "x1", "y"),
        lt(2, "(f x1)", "(f y)")
    )
}

/// The expected output of `#normalize SST ks` for k = 0, 1, 2.
pub fn sst(k: usize) -> String {
    // SST 0 is Unit, and every skeleton of the unique 0-stage type is Unit.
    let sst1 = "Unit * (Unit -> U 0)".to_owned();
    match k {
        0 => "Unit".to_owned(),
        1 => sst1,
        // SK 1 X 2 pairs a point of SK 0 with a filler over each face.
        2 => format!("(X : {sst1}) * ((x : Unit) * ({} -> snd X x) -> U 0)", delta_1_2()),
        _ => panic!("only the first three stages are unfolded by hand"),
    }
}
