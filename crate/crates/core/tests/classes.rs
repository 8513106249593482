use trihom::recognize::{
    f_of_h, is_trigraph_tree, matching_property, recognize_special_tree_like, recognize_tree_like,
};
use trihom::{Budget, EdgeKind, Trigraph};

fn symmetric_trigraphs(k: usize) -> Vec<Trigraph> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|x| (x..k).map(move |y| (x, y))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut h = Trigraph::new(k);
            for &(x, y) in &pairs {
                h.set_sym(x, y, EdgeKind::ALL[code % 3]);
                code /= 3;
            }
            h
        })
        .collect()
}

#[test]
fn containment_on_symmetric_three_vertex_trigraphs() {
    let b = Budget::default();
    let all = symmetric_trigraphs(3);
    assert_eq!(all.len(), 729);
    let mut violations = Vec::new();
    for h in &all {
        let tree = is_trigraph_tree(h);
        let special = recognize_special_tree_like(h, &b).unwrap().is_some();
        let cert = recognize_tree_like(h, &b).unwrap();
        if let Some(c) = &cert {
            c.replay(h).unwrap();
        }
        if (tree && !special) || (special && cert.is_none()) {
            violations.push(h.matrix_string());
        }
    }
    assert!(violations.is_empty(), "{violations:?}");
}

#[test]
fn trees_use_f_of_h() {
    for h in symmetric_trigraphs(3).iter().filter(|h| is_trigraph_tree(h)) {
        assert!(matching_property(h, &f_of_h(h)), "{}", h.matrix_string());
    }
}
