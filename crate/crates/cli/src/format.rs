/// Rounds `x` to `digits` significant digits and prints the shortest decimal
/// that reads back to the rounded value.
pub fn format_number(x: f64, digits: usize) -> String {
    let rounded = round_significant(x, digits);
    if rounded == 0.0 {
        return "0".to_string();
    }
    format!("{rounded}")
}

pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x + 0.0;
    }
    let digits = digits.clamp(1, 17);
    format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float parses")
}
