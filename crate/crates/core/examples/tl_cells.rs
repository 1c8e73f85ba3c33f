//! Reduction fibers of affine A_3 and the involution in each cell.

use fcinv::cells::{cells_report, involution_of, reduce_fully, split_top_bottom, Policy};
use fcinv::{build_graph, heap_from_word, Family, GroupType};

fn main() -> fcinv::Result<()> {
    let g = build_graph(GroupType::new(Family::AffA, 4)?)?;
    let h = heap_from_word(&g.parse_word("s_1 s_0 s_2 s_1 s_3 s_2")?, &g)?;
    let r = reduce_fully(&h, &g, Policy::Smallest)?;
    let split = split_top_bottom(&r, &g)?;
    println!("{} reduces to {}", g.format_word(&h.word()), g.format_word(&r.word()));
    println!("top {:?} bottom {:?} factors {:?}", split.top, split.bottom, split.factors);
    if let Some(v) = involution_of(&r, &g)? {
        println!("cell involution {}", g.format_word(&v.word()));
    }

    let report = cells_report(&g, 8)?;
    println!("{} elements in {} cells, audit passed: {}", report.elements, report.cells.len(), report.passed);
    for c in report.cells.iter().take(8) {
        println!("  {:<28} size {:>3} involution {:?}", c.irreducible, c.size, c.involution_member());
    }
    Ok(())
}
