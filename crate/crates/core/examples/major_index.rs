//! Major-index generating functions against brute force.

use fcinv::enumerate::maj_profile;
use fcinv::genfunc::{maj_genfunc, maj_genfunc_by_descents};
use fcinv::{build_graph, Family, GroupType};

fn main() -> fcinv::Result<()> {
    for (family, n) in [(Family::A, 4), (Family::A, 6), (Family::B, 4), (Family::D, 4)] {
        let t = GroupType::new(family, n)?;
        let formula = maj_genfunc(t)?;
        let oracle = maj_profile(&build_graph(t)?)?;
        println!("{t}: {} [{}]", formula.display("q"), if formula == oracle { "ok" } else { "MISMATCH" });
    }
    for k in 0..=3 {
        println!("B_5, {k} descents: {}", maj_genfunc_by_descents(5, k).display("q"));
    }
    Ok(())
}
