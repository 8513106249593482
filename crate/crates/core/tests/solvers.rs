use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trihom::gen::{random_instance, random_tree};
use trihom::pipeline::solve_tree;
use trihom::{brute_force, check_certificate, Budget};

#[test]
fn random_trees_agree_with_oracle() {
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut yes = 0;
    for i in 0..6000 {
        let k = rng.gen_range(1..=5);
        let h = random_tree(k, &mut rng);
        let n = rng.gen_range(0..=7);
        let arc_p = [0.15, 0.3, 0.5][i % 3];
        let list_p = [0.5, 0.8, 1.0][(i / 3) % 3];
        let inst = random_instance(&h, n, arc_p, list_p, &mut rng);
        let got = solve_tree(&inst, &b).unwrap_or_else(|e| panic!("sample {i}: {e}\n{}\n{inst:?}", h.to_tri()));
        let want = brute_force(&inst, false, &b).unwrap();
        assert_eq!(got.is_some(), want.is_some(), "sample {i}\n{}\n{inst:?}", h.to_tri());
        if let Some(f) = got {
            yes += 1;
            assert!(check_certificate(&inst, &f, false).unwrap());
        }
    }
    eprintln!("yes: {yes}");
}

fn tree_like_suite(seed: u64, samples: usize, shape: fn(usize, &mut ChaCha8Rng) -> trihom::Trigraph) -> (usize, usize) {
    use trihom::pipeline::solve_tree_like;
    use trihom::recognize::recognize_tree_like;
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut done, mut yes) = (0, 0);
    while done < samples {
        let k = rng.gen_range(1..=5);
        let h = shape(k, &mut rng);
        let Some(cert) = recognize_tree_like(&h, &b).unwrap() else { continue };
        for _ in 0..4 {
            let n = rng.gen_range(0..=7);
            let inst = random_instance(&h, n, [0.15, 0.3, 0.5][done % 3], [0.6, 1.0][done % 2], &mut rng);
            let got = solve_tree_like(&inst, &cert, &b)
                .unwrap_or_else(|e| panic!("sample {done}: {e}\n{}\n{cert:?}\n{inst:?}", h.to_tri()));
            let want = brute_force(&inst, false, &b).unwrap();
            assert_eq!(got.is_some(), want.is_some(), "sample {done}\n{}\n{cert:?}\n{inst:?}", h.to_tri());
            yes += got.is_some() as usize;
            done += 1;
        }
    }
    (done, yes)
}

#[test]
fn tree_like_agrees_with_oracle() {
    use trihom::gen::{random_cycle, random_trigraph};
    eprintln!("trees {:?}", tree_like_suite(1, 1200, |k, r| random_tree(k, r)));
    eprintln!("cycles {:?}", tree_like_suite(2, 1200, |k, r| random_cycle(k.max(3), r)));
    eprintln!("any {:?}", tree_like_suite(3, 1200, |k, r| random_trigraph(k.min(4), r)));
}

#[test]
fn good_cycles_agree_with_oracle() {
    use trihom::gen::random_cycle;
    use trihom::pipeline::solve_good_cycle;
    use trihom::recognize::good_cycle_condition;
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut by_clause = std::collections::BTreeMap::new();
    let mut done = 0;
    while done < 2400 {
        let h = random_cycle(rng.gen_range(5..=6), &mut rng);
        let Some(c) = good_cycle_condition(&h).unwrap() else { continue };
        // Clause (i) dominates random cycles; thin it out.
        if c.roman() == "i" && by_clause.get("i").copied().unwrap_or(0) * 3 > done / 4 {
            continue;
        }
        *by_clause.entry(c.roman()).or_insert(0) += 1;
        for _ in 0..4 {
            let n = rng.gen_range(0..=6);
            let inst = random_instance(&h, n, [0.15, 0.3, 0.5][done % 3], [0.6, 1.0][done % 2], &mut rng);
            let got = solve_good_cycle(&inst, &b)
                .unwrap_or_else(|e| panic!("sample {done}: {e}\n{}\n{inst:?}", h.to_tri()));
            let want = brute_force(&inst, false, &b).unwrap();
            assert_eq!(got.is_some(), want.is_some(), "sample {done}\n{}\n{inst:?}", h.to_tri());
            done += 1;
        }
    }
    eprintln!("{by_clause:?}");
}

#[test]
fn digraph_families_agree_with_oracle() {
    use trihom::gen::random_trigraph;
    use trihom::pipeline::reduce_to_digraph_family;
    use trihom::recognize::recognize_tree_like;
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut done = 0;
    let mut sizes = 0;
    while done < 1600 {
        let k = rng.gen_range(1..=5);
        let h = if done % 2 == 0 { random_tree(k, &mut rng) } else { random_trigraph(k.min(4), &mut rng) };
        if recognize_tree_like(&h, &b).unwrap().is_none() {
            continue;
        }
        let (minus, _) = h.h_minus();
        for _ in 0..4 {
            let n = rng.gen_range(0..=6);
            let inst = random_instance(&h, n, [0.15, 0.3, 0.5][done % 3], [0.6, 1.0][done % 2], &mut rng);
            let fam = reduce_to_digraph_family(&inst, &b)
                .unwrap_or_else(|e| panic!("sample {done}: {e}\n{}\n{inst:?}", h.to_tri()));
            assert!(fam.members.iter().all(|m| !m.h.has_strong()));
            if h.has_strong() {
                assert!(fam.members.iter().all(|m| m.h == minus));
            }
            sizes += fam.len();
            let or = fam.members.iter().any(|m| brute_force(m, false, &b).unwrap().is_some());
            let want = brute_force(&inst, false, &b).unwrap().is_some();
            assert_eq!(or, want, "sample {done}\n{}\n{inst:?}\n{fam:?}", h.to_tri());
            done += 1;
        }
    }
    eprintln!("members emitted: {sizes}");
}

#[test]
fn surjective_agrees_with_oracle() {
    use trihom::gen::{random_digraph, random_trigraph};
    use trihom::surjective::{anchor_embed, solve_surjective, surjective_via_reduction};
    use trihom::recognize::recognize_special_tree_like;
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut special = 0;
    for i in 0..600 {
        let k = rng.gen_range(1..=4);
        let h = if i % 2 == 0 { random_tree(k, &mut rng) } else { random_trigraph(k, &mut rng) };
        let n = rng.gen_range(0..=7);
        let inst = random_instance(&h, n, [0.2, 0.4][i % 2], [0.7, 1.0][(i / 2) % 2], &mut rng);
        let got = solve_surjective(&inst, &b).unwrap_or_else(|e| panic!("sample {i}: {e}\n{inst:?}"));
        let want = brute_force(&inst, true, &b).unwrap();
        assert_eq!(got.is_some(), want.is_some(), "sample {i}\n{inst:?}");
        if recognize_special_tree_like(&h, &b).unwrap().is_some() {
            special += 1;
            assert_eq!(surjective_via_reduction(&inst, &b).unwrap(), want.is_some(), "sample {i}\n{inst:?}");
        }
    }
    assert!(special > 100, "{special}");
    for i in 0..300 {
        let k = rng.gen_range(1..=4);
        let h = random_digraph(k, &mut rng);
        let keep: trihom::VSet = (0..k).filter(|_| rng.gen_bool(0.7)).collect();
        let (h0, map) = h.induced(keep);
        let n = rng.gen_range(0..=5);
        let inst0 = random_instance(&h0, n, 0.4, 0.7, &mut rng);
        let gadget = anchor_embed(&h, &inst0, &map).unwrap();
        let list = brute_force(&inst0, false, &b).unwrap().is_some();
        let surj = brute_force(&gadget, true, &b).unwrap().is_some();
        assert_eq!(list, surj, "pair {i}");
    }
}
