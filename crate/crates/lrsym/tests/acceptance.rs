//! End-to-end acceptance checks: golden figures, exhaustive map
//! identities, count symmetries, involution/confluence properties, and
//! the linear-scaling certification. Each criterion prints one pass line.

use std::time::Instant;

use lrsym::circuits::{bench, dilation_base, e_from_rho3, log_log_slope, rho3_from_e, Value};
use lrsym::conjugation::rho3;
use lrsym::crystal::{reversal, sigma0};
use lrsym::jdt::rectify;
use lrsym::oracle::{verify_symmetries, Bounds};
use lrsym::plactic::burge;
use lrsym::shapes::{Partition, SkewShape};
use lrsym::suites::{
    suite_confluence, suite_conjugation, suite_crystal, suite_fast_slow, suite_involutions,
    suite_switching, suite_tau_diagram, triples,
};
use lrsym::switching::rho_bss;
use lrsym::tableau::Tableau;
use lrsym::words::Word;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn skew(outer: &[usize], inner: &[usize], rows: &[&[usize]]) -> Tableau {
    let shape = SkewShape::new(p(outer), p(inner)).unwrap();
    Tableau::with_default_bound(shape, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn t0() -> Tableau {
    dilation_base()
}

fn t1() -> Tableau {
    skew(&[4, 4, 2], &[2, 1], &[&[1, 1], &[1, 2, 2], &[1, 3]])
}

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn criterion_1_golden_figures() {
    let start = Instant::now();
    let t = t0();

    assert_eq!(t.row_word().to_string(), "1111221332");
    assert_eq!(t.column_word().to_string(), "1112123132");

    let hat = t.standardize();
    assert_eq!(
        hat.as_tableau().row_word().letters(),
        &[5, 4, 3, 2, 8, 7, 1, 10, 9, 6]
    );
    let hat_t = hat.transpose();
    assert_eq!(
        hat_t.as_tableau().shape(),
        &SkewShape::new(p(&[3, 3, 3, 2, 1, 1]), p(&[2, 1])).unwrap()
    );
    assert_eq!(
        hat_t.as_tableau().rows_vec(),
        vec![
            vec![6],
            vec![1, 9],
            vec![2, 7, 10],
            vec![3, 8],
            vec![4],
            vec![5]
        ]
    );

    assert_eq!(
        t.recording_matrix().entries(),
        &[vec![4, 0, 0], vec![1, 2, 0], vec![0, 1, 2]]
    );

    let tau = t.tau().unwrap();
    assert_eq!(
        tau.rows_vec(),
        vec![vec![1, 1, 1, 1, 2], vec![2, 2, 3], vec![3, 3]]
    );

    assert_eq!(sigma0(&t.row_word()).to_string(), "3311222333");

    let e = reversal(&t).unwrap();
    assert_eq!(
        e.rows_vec(),
        vec![vec![1, 1, 3, 3], vec![2, 2, 2], vec![3, 3, 3]]
    );
    let eb = e.rotate();
    assert_eq!(eb.shape(), &SkewShape::new(p(&[6, 5, 4]), p(&[3, 2])).unwrap());
    assert_eq!(
        eb.rows_vec(),
        vec![vec![1, 1, 1], vec![2, 2, 2], vec![1, 1, 3, 3]]
    );

    let r = rho3(&t).unwrap();
    assert_eq!(
        r.shape(),
        &SkewShape::new(p(&[3, 3, 3, 2, 1, 1]), p(&[2, 1])).unwrap()
    );
    assert_eq!(
        r.rows_vec(),
        vec![
            vec![1],
            vec![1, 2],
            vec![1, 2, 3],
            vec![2, 3],
            vec![4],
            vec![5]
        ]
    );
    assert_eq!(r.column_word().to_string(), "1231231245");

    // the word chain of the second worked example
    let w = word("1122131");
    let wd = w.diamond().unwrap();
    assert_eq!(wd.to_string(), "1212314");
    assert_eq!(wd.dualize().to_string(), "1423434");
    // its position tableau feeds the dual Burge symbol
    let expected_q = rectify(&w.u_tableau().unwrap().as_tableau().rotate());
    assert_eq!(burge(&w.dualize()).q.as_tableau(), &expected_q);

    let d = t1().blacklozenge_slow().unwrap();
    assert_eq!(d.shape(), &SkewShape::new(p(&[3, 3, 2, 1]), p(&[1, 1])).unwrap());
    assert_eq!(
        d.rows_vec(),
        vec![vec![1, 1], vec![2, 2], vec![1, 3], vec![4]]
    );
    let db = d.rotate();
    assert_eq!(db.shape(), &SkewShape::new(p(&[3, 3, 2, 2]), p(&[2, 1])).unwrap());
    assert_eq!(
        db.rows_vec(),
        vec![vec![1], vec![2, 4], vec![3, 3], vec![4, 4]]
    );

    // the switching figure: rho_bss lands on the same tableau as rho3
    assert_eq!(rho_bss(&t).unwrap(), r);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "golden figures took {:?}", elapsed);
    println!("criterion 1 (golden figures, <1s): pass [{:?}]", elapsed);
}

#[test]
fn criterion_2_rho3_equals_rho_bss_exhaustive() {
    let start = Instant::now();
    let checked = suite_conjugation(Bounds::default()).unwrap();
    assert!(checked > 1_000, "only {} instances", checked);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {:?}", elapsed);
    println!(
        "criterion 2 (rho3 = rho_bss on {} tableaux, <5min): pass [{:?}]",
        checked, elapsed
    );
}

#[test]
fn criterion_3_fast_equals_slow() {
    let checked = suite_fast_slow(Bounds::default()).unwrap();
    // the suite includes a dilation of the running example past 1e5 cells
    assert!(dilation_base().dilate(10_000).num_cells() >= 100_000);
    println!("criterion 3 (fast = slow lozenge, {} checks): pass", checked);
}

#[test]
fn criterion_4_commuting_diagram() {
    let checked = suite_tau_diagram(Bounds::default()).unwrap();
    assert!(checked > 1_000);
    println!("criterion 4 (tau/evacuation diagram, {} checks): pass", checked);
}

#[test]
fn criterion_5_count_symmetries() {
    let mut checked = 0;
    for (lambda, mu, nu) in triples(Bounds::default()) {
        let r = verify_symmetries(&lambda, &mu, &nu).unwrap();
        assert_eq!(r.c, r.conj_count, "{:?}/{:?} {:?}", lambda, mu, nu);
        assert_eq!(r.c, r.comm_count, "{:?}/{:?} {:?}", lambda, mu, nu);
        assert_eq!(r.c, r.diamond_count, "{:?}/{:?} {:?}", lambda, mu, nu);
        assert!(r.bijection_ok, "{:?}/{:?} {:?}", lambda, mu, nu);
        checked += 1;
    }
    println!("criterion 5 (count symmetries on {} triples): pass", checked);
}

#[test]
fn criterion_6_involutions_and_confluence() {
    let b = Bounds::default();
    let inv = suite_involutions(b).unwrap();
    let conf = suite_confluence(b, 42, 50).unwrap();
    let crystal = suite_crystal(42).unwrap();
    println!(
        "criterion 6 (involutions {}, confluence {}, crystal {}): pass",
        inv, conf, crystal
    );
}

#[test]
fn criterion_7_linearity() {
    let scales: Vec<usize> = (1..=256).collect();
    let reports = bench("fast-blacklozenge", &dilation_base(), &scales, 3).unwrap();
    let points: Vec<(usize, u128)> = reports.iter().map(|r| (r.cells, r.wall_nanos)).collect();
    let slope = log_log_slope(&points);
    assert!(
        (0.8..=1.2).contains(&slope),
        "log-log slope {} outside [0.8, 1.2]",
        slope
    );
    // the Remark inequality is checked on every evaluation; an error would
    // have surfaced above, so reaching here means it never fired
    for t in [dilation_base(), t1(), dilation_base().dilate(64)] {
        let (_, calls) = rho3_from_e().evaluate(Value::Tab(t.clone())).unwrap();
        assert_eq!(calls, 1, "rho3_from_E alpha calls");
        let pair = Value::Pair(
            Box::new(Value::Tab(t.tau().unwrap())),
            Box::new(Value::Part(t.shape().inner().clone())),
        );
        let (_, calls) = e_from_rho3().evaluate(pair).unwrap();
        assert_eq!(calls, 1, "E_from_rho3 alpha calls");
    }
    println!("criterion 7 (linearity, slope {:.3}, alpha calls = 1): pass", slope);
}

#[test]
fn criterion_8_self_validating_postconditions() {
    // rho_bss asserts Knuth equivalence to Y(nu^t) and dual equivalence to
    // the transposed standardization internally; running it across the
    // bounded family plus the golden instance exercises both assertions
    let checked = suite_switching(Bounds::default()).unwrap();
    assert!(checked > 1_000);
    rho_bss(&t0()).unwrap();
    println!(
        "criterion 8 (rho_bss class memberships on {} runs): pass",
        checked
    );
}
