//! Laufer's fundamental cycle and the rationality test.

use lspace::{euler_characteristic, fundamental_cycle, is_rational, valency_bounds, PlumbingGraph};

fn main() -> lspace::Result<()> {
    let graphs = [
        ("D4", PlumbingGraph::star(-2, &[&[-2], &[-2], &[-2]])),
        ("E8", PlumbingGraph::star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]])),
        ("(-1; -2,-3,-7)", PlumbingGraph::star(-1, &[&[-2], &[-3], &[-7]])),
        ("(-3; -2,-2,-2,-2)", PlumbingGraph::star(-3, &[&[-2], &[-2], &[-2], &[-2]])),
    ];
    for (name, g) in graphs {
        let z = fundamental_cycle(&g)?;
        let coefficients: Vec<String> = z.iter().map(|(_, c)| c.to_string()).collect();
        println!(
            "{name:<18} Z = ({})  chi = {}  bounds: {:?}  rational: {}",
            coefficients.join(","),
            euler_characteristic(&g, &z),
            valency_bounds(&g),
            is_rational(&g)?
        );
    }
    Ok(())
}
