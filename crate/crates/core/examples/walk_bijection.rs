//! Self-dual alternating heaps of A_4 as walks, and back.

use fcinv::enumerate::all_involutions;
use fcinv::heap::major_index;
use fcinv::walk::{decode_walk, encode_walk, total_height, walk_to_frobenius, FrobeniusMode, Scheme};
use fcinv::{build_graph, Family, GroupType};

fn main() -> fcinv::Result<()> {
    let g = build_graph(GroupType::new(Family::A, 5)?)?;
    for h in all_involutions(&g)? {
        let w = encode_walk(&h, Scheme::TypeA, &g)?;
        assert_eq!(decode_walk(&w, Scheme::TypeA, &g)?, h);
        let frob = walk_to_frobenius(&w, FrobeniusMode::A)?;
        println!(
            "{:<24} walk {:<7} |H|={} weight={} maj={} partition {:?}",
            g.format_word(&h.word()),
            w.to_string(),
            h.len(),
            total_height(&w, Scheme::TypeA.weight()),
            major_index(&h, &g)?,
            frob.partition()
        );
    }
    Ok(())
}
