//! Heaps, the FC test, self-duality and the B-type classification.

use fcinv::heap::{classify_involution, is_alternating, is_reduced_fc, is_self_dual, right_descents};
use fcinv::{build_graph, heap_from_word, Family, GroupType};

fn main() -> fcinv::Result<()> {
    let b3 = build_graph(GroupType::new(Family::B, 3)?)?;
    for text in ["s_2 s_1 s_3 s_2", "s_1 s_2 s_3 s_2 s_1", "s_3 s_2 s_3 s_2", "s_2 s_3 s_2"] {
        let h = heap_from_word(&b3.parse_word(text)?, &b3)?;
        print!("{text:<22} fc={} ", is_reduced_fc(&h, &b3));
        if !is_reduced_fc(&h, &b3) {
            println!();
            continue;
        }
        let des: Vec<&str> = right_descents(&h, &b3)?.into_iter().map(|s| b3.name(s)).collect();
        print!("descents={des:?} self_dual={} alternating={}", is_self_dual(&h, &b3), is_alternating(&h, &b3));
        if is_self_dual(&h, &b3) {
            print!(" class={:?}", classify_involution(&h, &b3)?);
        }
        println!();
        println!("{}", h.display(&b3));
    }
    Ok(())
}
