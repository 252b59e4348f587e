//! Blow-ups, blow-downs and normalization.

use lspace::{blow_down, blow_up, normalize, random_smooth_decorated, MoveSite, PlumbingGraph, VertexId};

fn show(label: &str, g: &PlumbingGraph) {
    let w: Vec<String> = g.weighted_vertices().map(|(v, w)| format!("{v}:{w}")).collect();
    let e: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    println!("{label:<14} [{}] edges [{}]  |H1| = {}", w.join(" "), e.join(" "), g.h1_order());
}

fn main() -> lspace::Result<()> {
    let g = PlumbingGraph::chain(&[-2, -3]);
    show("start", &g);
    let up = blow_up(&g, MoveSite::AtEdge(VertexId(0), VertexId(1)))?;
    show("edge blow-up", &up);
    show("blow-down", &blow_down(&up, VertexId(2))?);

    let positive_leaf = PlumbingGraph::chain(&[-2, -2, 3]);
    show("positive leaf", &positive_leaf);
    show("normalized", &normalize(&positive_leaf)?);

    let smooth = random_smooth_decorated(7, 6, 0).into_graph();
    show("smooth", &smooth);
    show("normalized", &normalize(&smooth)?);
    Ok(())
}
