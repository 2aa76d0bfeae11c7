//! Smallest window holding one candidate from every list, compared with
//! brute-force enumeration.

use pinching::oracle::exhaustive_min_span;
use pinching::placement::min_span;

fn main() -> pinching::Result<()> {
    let lists = vec![
        vec![4.0, 10.0, 15.0, 24.0, 26.0],
        vec![0.0, 9.0, 12.0, 20.0],
        vec![5.0, 18.0, 22.0, 30.0],
    ];
    let fast = min_span(&lists)?;
    let slow = exhaustive_min_span(&lists)?;
    println!("sliding window: picks {:?}, span {}, midpoint {}", fast.chosen, fast.span, fast.midpoint);
    println!("exhaustive:     picks {:?}, span {}", slow.chosen, slow.span);
    Ok(())
}
