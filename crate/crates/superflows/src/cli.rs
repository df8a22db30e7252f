//! (under construction)
pub fn run(_argv: &[String]) -> i32 {
    2
}
