//! Closed-form verdicts for surgeries on (2p, 2q) torus links, drawn as a grid.

use lspace::{atlas, Verdict};

fn glyph(v: Verdict) -> char {
    match v {
        Verdict::LSpace => 'L',
        Verdict::NotLSpace => '.',
        Verdict::NotQHS => '0',
        Verdict::BoundaryCase => '+',
        Verdict::Unknown => '?',
    }
}

fn main() -> lspace::Result<()> {
    let grid = atlas(2, 3, -6, 12, false)?;
    println!("d1 down, d2 across, both in [-6, 12]");
    for row in grid.cells.chunks(grid.side()) {
        let line: String = row.iter().map(|c| glyph(c.verdict)).collect();
        println!("{:>3} {line}", row[0].d1);
    }
    let resolved = atlas(2, 3, -6, 12, true)?;
    let left = resolved.cells.iter().filter(|c| c.verdict == Verdict::BoundaryCase).count();
    println!("boundary cells left after running the graph oracle: {left}");
    Ok(())
}
