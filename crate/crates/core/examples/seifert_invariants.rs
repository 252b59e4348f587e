//! Seifert invariants of star-shaped graphs and the L-space inequality test.

use lspace::{is_lspace_star, ls_obstruction, min_denominator_fraction, seifert_data, Fraction, PlumbingGraph};

fn main() -> lspace::Result<()> {
    for (name, g) in [
        ("(-1; -2,-3,-7)", PlumbingGraph::star(-1, &[&[-2], &[-3], &[-7]])),
        ("(-1; -2,-3,-5)", PlumbingGraph::star(-1, &[&[-2], &[-3], &[-5]])),
        ("(-2; -3,-3,-3,-3)", PlumbingGraph::star(-2, &[&[-3], &[-3], &[-3], &[-3]])),
        ("(-1; -2,-2 -2,-3 -3)", PlumbingGraph::star(-1, &[&[-2], &[-2, -2], &[-3, -3]])),
    ] {
        match seifert_data(&g)? {
            None => println!("{name:<22} e_orb = 0"),
            Some(sd) => {
                let fibers: Vec<String> = sd.fibers.iter().map(Fraction::to_string).collect();
                println!(
                    "{name:<22} e0 = {}  fibers ({})  e_orb = {}  flipped = {}  |H1| = {}  -> {}",
                    sd.central,
                    fibers.join(", "),
                    sd.e_orb,
                    sd.flipped,
                    sd.h1_order(),
                    is_lspace_star(&g)?
                );
            }
        }
    }

    let (lo, hi) = (Fraction::new(3, 10), Fraction::new(1, 3));
    println!("least denominator in ({lo}, {hi}): {}", min_denominator_fraction(lo, hi).unwrap());
    let fibers = [Fraction::new(1, 2), Fraction::new(1, 3), Fraction::new(1, 7)];
    println!("witness for (1/2, 1/3, 1/7): {:?}", ls_obstruction(&fibers));
    Ok(())
}
