//! Row insertion on involutions of S_4 against the heap walk.

use fcinv::enumerate::all_involutions;
use fcinv::rsk::rsk_walk;
use fcinv::walk::{encode_walk, Scheme, Step};
use fcinv::{build_graph, Family, GroupType};

fn main() -> fcinv::Result<()> {
    let g = build_graph(GroupType::new(Family::A, 4)?)?;
    for h in all_involutions(&g)? {
        let beta = rsk_walk(&h, &g)?;
        let gamma = encode_walk(&h, Scheme::TypeA, &g)?;
        let lifted = gamma.map_steps(|s| if s == Step::Horiz { Step::Up } else { s });
        println!("{:<16} rsk {} heap {} agree={}", g.format_word(&h.word()), beta, gamma, beta == lifted);
    }
    Ok(())
}
