//! The Poincaré sphere from E8, and large surgeries on links in its blow-ups.

use lspace::calculus::{random_blowups, random_decoration};
use lspace::{is_lspace_oracle, poincare_graph, surgery_graph, ResolutionData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> lspace::Result<()> {
    let e8 = poincare_graph();
    println!("E8: {} with |H1| = {}", is_lspace_oracle(&e8)?, e8.h1_order());

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for run in 0..5 {
        let mut g = poincare_graph();
        random_blowups(&mut g, 5, &mut rng);
        let res = ResolutionData::from_decorated(random_decoration(g, 2, &mut rng))?;
        let d: Vec<i64> = res
            .decorated
            .arrow_sites()
            .iter()
            .map(|&v| res.own_multiplicity(v).unwrap() + rng.gen_range(1..=3))
            .collect();
        let verdict = is_lspace_oracle(&surgery_graph(&res, &d)?)?;
        println!("run {run}: d = {d:?} -> {verdict}");
    }
    Ok(())
}
