//! Intersection form, determinant and definiteness of a plumbing tree.

use lspace::PlumbingGraph;

fn main() {
    let g = PlumbingGraph::star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]]);
    let form = g.intersection_matrix();
    for row in form.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("{}", cells.join(""));
    }
    println!("determinant        {}", form.determinant());
    println!("leading minors     {:?}", form.leading_minors());
    println!("negative definite  {}", form.is_negative_definite());
    println!("|H1|               {}", g.h1_order());

    let lens = PlumbingGraph::chain(&[-2, -3, -4]);
    println!("chain [-2,-3,-4]: |H1| = {}", lens.h1_order());
}
