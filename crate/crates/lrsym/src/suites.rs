//! Exhaustive property suites over bounded LR instances. Each suite
//! returns the first counterexample found, described tersely enough to
//! reproduce it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conjugation::{fast_blacklozenge_runs, rho3, rho3_variants, Rho3Order};
use crate::crystal::{
    alternative_reduced_word, default_reduced_word, reversal, sigma, sigma0_along,
};
use crate::jdt::{evacuate, rectify, rectify_random};
use crate::oracle::{enumerate_lr, partitions_within, Bounds};
use crate::plactic::burge;
use crate::shapes::Partition;
use crate::switching::rho_bss;
use crate::tableau::Tableau;
use crate::words::Word;

/// All `(lambda, mu, nu)` with `mu` inside `lambda`, `|lambda| = |mu| +
/// |nu|`, every partition within the bounds.
pub fn triples(b: Bounds) -> Vec<(Partition, Partition, Partition)> {
    let all = partitions_within(b);
    let mut out = Vec::new();
    for lambda in &all {
        for mu in &all {
            if mu.size() > lambda.size()
                || (0..mu.len()).any(|i| mu.part(i) > lambda.part(i))
            {
                continue;
            }
            let rest = lambda.size() - mu.size();
            for nu in &all {
                if nu.size() == rest {
                    out.push((lambda.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    out
}

/// Every LR tableau of every bounded triple.
pub fn all_lr_tableaux(b: Bounds) -> Vec<Tableau> {
    triples(b)
        .iter()
        .flat_map(|(l, m, n)| enumerate_lr(l, m, n).expect("valid triple"))
        .collect()
}

fn describe(t: &Tableau) -> String {
    format!("{:?}", t)
}

pub type SuiteResult = std::result::Result<usize, String>;

/// rho3 agrees with the switching construction everywhere.
pub fn suite_conjugation(b: Bounds) -> SuiteResult {
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        let a = rho3(&t).map_err(|e| format!("rho3 failed: {} on {}", e, describe(&t)))?;
        let c = rho_bss(&t).map_err(|e| format!("rho_bss failed: {} on {}", e, describe(&t)))?;
        if a != c {
            return Err(format!("rho3 != rho_bss on {}", describe(&t)));
        }
        checked += 1;
    }
    Ok(checked)
}

/// The fast recording-matrix lozenge equals the word-level construction.
pub fn suite_fast_slow(b: Bounds) -> SuiteResult {
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        let slow = t
            .blacklozenge_slow()
            .map_err(|e| format!("slow lozenge failed: {} on {}", e, describe(&t)))?;
        let fast = fast_blacklozenge_runs(&t.recording_matrix())
            .map_err(|e| format!("fast lozenge failed: {} on {}", e, describe(&t)))?;
        if fast != slow.recording_rows_sparse() {
            return Err(format!("fast != slow lozenge on {}", describe(&t)));
        }
        checked += 1;
    }
    // dilated instances: the same agreement up to 1e5 cells
    for k in [100, 2_000, 10_000] {
        let t = crate::circuits::dilation_base().dilate(k);
        let slow = t.blacklozenge_slow().unwrap().recording_rows_sparse();
        let fast = fast_blacklozenge_runs(&t.recording_matrix()).unwrap();
        if fast != slow {
            return Err(format!("fast != slow lozenge on dilation k={}", k));
        }
        checked += 1;
    }
    Ok(checked)
}

/// tau(rotate(reversal(T))) = evacuate(tau(T)).
pub fn suite_tau_diagram(b: Bounds) -> SuiteResult {
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        let lhs = reversal(&t)
            .and_then(|e| e.rotate().tau())
            .map_err(|e| format!("diagram lhs failed: {} on {}", e, describe(&t)))?;
        let rhs = t
            .tau()
            .and_then(|p| evacuate(&p))
            .map_err(|e| format!("diagram rhs failed: {} on {}", e, describe(&t)))?;
        if lhs != rhs {
            return Err(format!("tau diagram broken on {}", describe(&t)));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Involutions: rotation, the lozenge, evacuation, sigma_i, and the
/// rho3 order identities.
pub fn suite_involutions(b: Bounds) -> SuiteResult {
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        if t.rotate().rotate() != t {
            return Err(format!("rotate not involutive on {}", describe(&t)));
        }
        let d = t
            .blacklozenge_slow()
            .map_err(|e| format!("lozenge failed: {} on {}", e, describe(&t)))?;
        if d.blacklozenge_slow().map_err(|e| e.to_string())? != t {
            return Err(format!("lozenge not involutive on {}", describe(&t)));
        }
        if d.rotate() != t.rotate().blacklozenge_slow().map_err(|e| e.to_string())? {
            return Err(format!("lozenge/rotate do not commute on {}", describe(&t)));
        }
        let canonical = rho3(&t).map_err(|e| e.to_string())?;
        for order in [Rho3Order::DiamondBulletE, Rho3Order::BulletDiamondE] {
            if rho3_variants(&t, order).map_err(|e| e.to_string())? != canonical {
                return Err(format!("rho3 order {:?} differs on {}", order, describe(&t)));
            }
        }
        if t.shape().inner().is_empty() {
            let e = evacuate(&t).map_err(|e| e.to_string())?;
            if evacuate(&e).map_err(|e| e.to_string())? != t {
                return Err(format!("evacuation not involutive on {}", describe(&t)));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// Rectification is independent of the corner order.
pub fn suite_confluence(b: Bounds, seed: u64, orders: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        let base = rectify(&t);
        for _ in 0..orders {
            if rectify_random(&t, &mut rng) != base {
                return Err(format!("corner order changed rectification of {}", describe(&t)));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// sigma_i involutions and Q-preservation; sigma0 reduced-word
/// independence and weight reversal.
pub fn suite_crystal(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..2_000 {
        let t = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=12);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=t)).collect();
        let w = Word::new(letters, t).expect("letters in range");
        for i in 1..t {
            let s = sigma(i, &w).expect("index in range");
            if sigma(i, &s).expect("index in range") != w {
                return Err(format!("sigma_{} not involutive on {:?}", i, w));
            }
            if burge(&s).q != burge(&w).q {
                return Err(format!("sigma_{} changed the Q-symbol of {:?}", i, w));
            }
        }
        let a = sigma0_along(&w, &default_reduced_word(t));
        let b = sigma0_along(&w, &alternative_reduced_word(t));
        if a != b {
            return Err(format!("sigma0 depends on the reduced word for {:?}", w));
        }
        let mut rev: Vec<usize> = w.weight().into_iter().rev().collect();
        rev.resize(t, 0);
        if a.weight() != rev {
            return Err(format!("sigma0 weight not reversed for {:?}", w));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Switching postconditions: rho_bss class membership is asserted inside
/// rho_bss itself, so running it over the family is the check.
pub fn suite_switching(b: Bounds) -> SuiteResult {
    let mut checked = 0;
    for t in all_lr_tableaux(b) {
        let x = rho_bss(&t).map_err(|e| format!("rho_bss failed: {} on {}", e, describe(&t)))?;
        let shape = t.shape();
        if x.shape().outer() != &shape.outer().conjugate()
            || x.shape().inner() != &shape.inner().conjugate()
        {
            return Err(format!("rho_bss shape wrong on {}", describe(&t)));
        }
        checked += 1;
    }
    Ok(checked)
}

/// The named suites in CLI order.
pub const SUITE_NAMES: &[&str] = &[
    "involutions",
    "confluence",
    "crystal",
    "switching",
    "conjugation",
    "tau-diagram",
    "fast-slow",
];

pub fn run_suite(name: &str, b: Bounds, seed: u64) -> SuiteResult {
    match name {
        "involutions" => suite_involutions(b),
        "confluence" => suite_confluence(b, seed, 50),
        "crystal" => suite_crystal(seed),
        "switching" => suite_switching(b),
        "conjugation" => suite_conjugation(b),
        "tau-diagram" => suite_tau_diagram(b),
        "fast-slow" => suite_fast_slow(b),
        other => Err(format!("unknown suite {:?}", other)),
    }
}
