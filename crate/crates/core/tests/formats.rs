use proptest::prelude::*;
use trihom::{EdgeKind, ListInstance, Trigraph, VSet};

fn trigraph() -> impl Strategy<Value = Trigraph> {
    (0usize..7).prop_flat_map(|k| {
        prop::collection::vec(0usize..3, k * k).prop_map(move |cells| {
            let mut h = Trigraph::new(k);
            for (i, c) in cells.into_iter().enumerate() {
                h.set(i / k, i % k, EdgeKind::ALL[c]);
            }
            h
        })
    })
}

fn instance() -> impl Strategy<Value = ListInstance> {
    (trigraph(), 0usize..8).prop_flat_map(|(h, n)| {
        let full = (1u64 << h.order()) - 1;
        (
            prop::collection::vec(any::<bool>(), n * n),
            prop::collection::vec(0..=full, n),
        )
            .prop_map(move |(bits, masks)| {
                let adj = (0..n).map(|u| (0..n).map(|v| u != v && bits[u * n + v]).collect()).collect();
                let lists = masks.into_iter().map(|m| (0..h.order()).filter(|x| m >> x & 1 == 1).collect::<VSet>()).collect();
                ListInstance::with_lists(h.clone(), adj, lists).unwrap()
            })
    })
}

/// Interleaves comment lines and trailing whitespace.
fn decorate(text: &str) -> String {
    let mut out = String::from("# leading comment\n");
    for line in text.lines() {
        out += &format!("{line}  \n# between\n");
    }
    out
}

proptest! {
    #[test]
    fn tri_round_trip(h in trigraph()) {
        let text = h.to_tri();
        let back = Trigraph::parse_tri(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(back.to_tri(), text);
        prop_assert_eq!(Trigraph::parse_tri(&decorate(&h.to_tri())).unwrap(), h);
    }

    #[test]
    fn lhi_round_trip(inst in instance()) {
        let text = inst.to_lhi();
        let back = ListInstance::parse_lhi(&inst.h, &text).unwrap();
        prop_assert_eq!(back.to_lhi(), text.clone());
        prop_assert_eq!(&back.lists, &inst.lists);
        prop_assert_eq!(back.adjacency(), inst.adjacency());
        let decorated = ListInstance::parse_lhi(&inst.h, &decorate(&text)).unwrap();
        prop_assert_eq!(decorated.to_lhi(), text);
    }

    #[test]
    fn malformed_rows_are_rejected(h in trigraph(), bad in "[^01*#\\s]") {
        prop_assume!(h.order() > 0);
        let mut lines: Vec<String> = h.to_tri().lines().map(String::from).collect();
        lines[1].replace_range(0..1, &bad);
        prop_assert!(Trigraph::parse_tri(&lines.join("\n")).is_err());
    }
}
