//! Where the first PA goes: the maximizer of the summed inverse path loss.

use pinching::center::{inverse_path_loss, optimize_center, DEFAULT_CENTER_TOLERANCE};
use pinching::channel::UserArray;

fn main() -> pinching::Result<()> {
    let arrays = [
        (vec![9.9, 10.1], 4.0),
        (vec![9.7, 9.9, 10.1, 10.3], 4.0),
        (vec![9.5, 9.6, 10.4], 0.5),
        (vec![0.0, 0.1, 3.0], 0.8),
    ];
    for (positions, d) in arrays {
        let user = UserArray::new(positions, d)?;
        let c = optimize_center(&user, DEFAULT_CENTER_TOLERANCE)?;
        println!(
            "{:?} d={d}: x_c = {:.7} via {:?} (concave: {}), L = {:.6}, L(midpoint) = {:.6}",
            user.positions(),
            c.x_center,
            c.method,
            c.concavity_certified,
            c.value,
            inverse_path_loss(&user, user.midpoint())
        );
    }
    Ok(())
}
