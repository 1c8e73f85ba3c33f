//! Length generating functions of finite types from the walk series.

use fcinv::enumerate::length_profile;
use fcinv::series::{length_genfunc_finite, solve_series, SeriesId};
use fcinv::{build_graph, Family, GroupType};

fn main() -> fcinv::Result<()> {
    let m = solve_series(SeriesId::M, 6, 8);
    for (k, c) in m.coeffs().iter().enumerate() {
        println!("[x^{k}] M = {}", c.display("t"));
    }
    for (family, n) in [(Family::A, 5), (Family::B, 3), (Family::D, 3)] {
        let t = GroupType::new(family, n)?;
        let formula = length_genfunc_finite(t)?;
        let oracle = length_profile(&build_graph(t)?)?;
        println!("{t}: {} [{}]", formula.display("t"), if formula == oracle { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
