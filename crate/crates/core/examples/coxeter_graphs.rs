//! Coxeter graphs of every classical family, and canonical words.

use fcinv::{build_graph, canonical_form, Family, GroupType};

fn main() -> fcinv::Result<()> {
    for family in Family::ALL {
        let g = build_graph(GroupType::new(family, 3)?)?;
        let edges: Vec<String> = g
            .edges()
            .map(|(a, b)| {
                let m = g.m(a, b).map_or("inf".to_string(), |m| m.to_string());
                format!("{}-{}({m})", g.name(a), g.name(b))
            })
            .collect();
        println!("{:<8} {}", g.group().to_string(), edges.join(" "));
    }

    // s_3 commutes past s_1, so both words share a canonical form
    let g = build_graph(GroupType::new(Family::A, 4)?)?;
    for text in ["s_1 s_3 s_2", "s_3 s_1 s_2"] {
        let w = g.parse_word(text)?;
        println!("{text:>12} -> {}", g.format_word(&canonical_form(&w, &g)?));
    }
    Ok(())
}
