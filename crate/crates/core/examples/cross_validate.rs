//! Closed-form classifier against the graph oracle on a few torus-link surgeries.

use lspace::{cross_validate, SurgerySpec};

fn main() -> lspace::Result<()> {
    for (p, q, d) in [(2, 3, vec![8, 9]), (2, 3, vec![-1]), (3, 4, vec![3, 5]), (2, 5, vec![7, 5, 12])] {
        print!("{}", cross_validate(&SurgerySpec::new(p, q, d)?)?.render());
        println!();
    }
    Ok(())
}
