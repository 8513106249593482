//! Randomized agreement of every applicable solver with brute force.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trihom::gen::random_instance;
use trihom::pipeline::{reduce_to_digraph_family, solve, Strategy};
use trihom::recognize::recognize_tree_like;
use trihom::surjective::solve_surjective;
use trihom::{brute_force, check_certificate, Budget, Certificate, Error, ListInstance, Trigraph};

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
}

impl Tally {
    fn line(&self, name: &str) -> String {
        format!("{name}: {}/{} pass", self.pass, self.pass + self.fail)
    }
}

/// Records whether a solver agrees with `want` and, if it returned a
/// homomorphism, whether that homomorphism is valid. Budget errors abort.
fn record(
    tally: &mut Tally,
    inst: &ListInstance,
    got: Result<Option<Certificate>, Error>,
    want: bool,
    surjective: bool,
) -> Result<(), Error> {
    let ok = match got {
        Ok(f) => f.is_some() == want && f.map_or(true, |f| check_certificate(inst, &f, surjective).unwrap_or(false)),
        Err(e @ Error::Budget(_)) => return Err(e),
        Err(e) => {
            eprintln!("{e}");
            false
        }
    };
    if ok {
        tally.pass += 1;
    } else {
        tally.fail += 1;
        eprintln!("disagreement on:\n{}", inst.to_lhi());
    }
    Ok(())
}

pub fn run(h: &Trigraph, max_n: usize, samples: usize, seed: u64, budget: &Budget) -> Result<u8, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reducible = !h.has_strong() || recognize_tree_like(h, budget)?.is_some();
    let (mut decision, mut family, mut surjective) = (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..samples {
        let n = rng.gen_range(0..=max_n);
        let inst = random_instance(h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), &mut rng);
        let want = brute_force(&inst, false, budget)?.is_some();
        let got = solve(&inst, Strategy::Auto, budget).map(|s| s.certificate);
        record(&mut decision, &inst, got, want, false)?;
        if reducible {
            let ok = match reduce_to_digraph_family(&inst, budget) {
                Ok(fam) => {
                    let mut any = false;
                    for m in &fam.members {
                        any |= brute_force(m, false, budget)?.is_some();
                    }
                    any == want && fam.members.iter().all(|m| !m.h.has_strong())
                }
                Err(e @ Error::Budget(_)) => return Err(e),
                Err(e) => {
                    eprintln!("{e}");
                    false
                }
            };
            if ok {
                family.pass += 1;
            } else {
                family.fail += 1;
                eprintln!("family disagrees on:\n{}", inst.to_lhi());
            }
        }
        let want = brute_force(&inst, true, budget)?.is_some();
        record(&mut surjective, &inst, solve_surjective(&inst, budget), want, true)?;
    }
    println!("samples: {samples} (max n {max_n}, seed {seed})");
    println!("{}", decision.line("decision"));
    if reducible {
        println!("{}", family.line("digraph family"));
    } else {
        println!("digraph family: skipped, trigraph is not tree-like");
    }
    println!("{}", surjective.line("surjective"));
    let failures = decision.fail + family.fail + surjective.fail;
    println!("result: {}", if failures == 0 { "PASS" } else { "FAIL" });
    Ok(if failures == 0 { 0 } else { super::NO })
}
