//! Checks the semiring axioms for hand-written tables and prints the first
//! counterexample for each law that fails.

use semirings::{distributes_report, verify_semiring, zero_element, OpTable};

fn main() -> semirings::Result<()> {
    let boolean = (
        OpTable::from_rows(&[[0, 1], [1, 1]])?,
        OpTable::from_rows(&[[0, 0], [0, 1]])?,
    );
    let z3 = (
        OpTable::from_fn(3, |x, y| (x + y) % 3),
        OpTable::from_fn(3, |x, y| (x * y) % 3),
    );
    // max with x * y = x + y mod 3 is not distributive.
    let broken = (
        OpTable::from_fn(3, |x, y| x.max(y)),
        OpTable::from_fn(3, |x, y| (x + y) % 3),
    );
    // left zero multiplication: x * y = x.
    let left_zero = (
        OpTable::from_fn(3, |x, y| x.min(y)),
        OpTable::from_fn(3, |x, _| x),
    );

    for (name, (add, mul)) in [
        ("boolean", boolean),
        ("Z/3", z3),
        ("max, +", broken),
        ("min, left zero", left_zero),
    ] {
        let report = verify_semiring(&add, &mul)?;
        println!("{name}: {report}");
        if report.is_semiring() {
            match zero_element(&add, &mul)? {
                Some(z) => println!("    zero element {z}"),
                None => println!("    no zero element"),
            }
        } else if let Some(failure) = distributes_report(&mul, &add)? {
            println!("    first distributivity failure: {failure}");
        }
    }
    Ok(())
}
