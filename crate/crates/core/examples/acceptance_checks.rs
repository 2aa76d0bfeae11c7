//! The acceptance suite through the library API.

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(pinching::verify::DEFAULT_SEED);
    for outcome in pinching::verify::run_all(seed) {
        println!("{outcome}");
    }
}
