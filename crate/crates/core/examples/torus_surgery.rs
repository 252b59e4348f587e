//! Resolution graph of a torus link and the plumbing graph of a surgery on it.

use lspace::cli::graph_file::{render_decorated, render_graph};
use lspace::{linking_det, surgery_graph, torus_resolution, SurgerySpec};

fn main() -> lspace::Result<()> {
    let res = torus_resolution(2, 3, 2)?;
    print!("{}", render_decorated(&res.decorated));
    let site = res.decorated.arrow_sites()[0];
    println!("multiplicities on the arrow vertex: {:?}", res.multiplicities[&site]);
    println!("linking matrix for d = (8, 9): {:?}", res.linking_matrix(&[8, 9])?);

    let g = surgery_graph(&res, &[8, 9])?;
    print!("{}", render_graph(&g));
    let spec = SurgerySpec::new(2, 3, vec![8, 9])?;
    println!("|H1| = {}, linking determinant = {}", g.h1_order(), linking_det(&spec));
    Ok(())
}
