//! End-to-end acceptance suite: each test certifies one headline claim and
//! prints a single pass/fail line.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lochom::findim::{
    cyclic_group, dihedral_group, exterior_algebra, ext_algebra, ext_k_a, frobenius_check,
    group_algebra, monomial_algebra, product_group, quaternion_group, socle_dim,
};
use lochom::koszul::{
    build_cech_with, euler_conservation_check, koszul_colimit_cohomology, les_check,
    local_cohomology, radical_invariance_check, vanishing_report,
};
use lochom::taylor::stable_ext_table;
use lochom::zp::{
    functor_laws_check, gamma_p, hom_ext, lambda_p, truncation_oracle, Atom, PLocalObject,
    ALL_ATOMS,
};
use lochom::{DegreeBox, FieldSpec, Monomial, MonomialIdeal, RingSpec};

fn report(n: u32, what: &str, pass: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "acceptance {n} ({what}): {} in {:.2?}",
        if pass && within { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(pass, "criterion {n} failed");
    assert!(within, "criterion {n} exceeded {budget:?}: took {elapsed:?}");
}

fn m(e: &[i64]) -> Monomial {
    Monomial(e.to_vec())
}

fn ideal(gens: &[Vec<i64>]) -> MonomialIdeal {
    if gens.is_empty() {
        MonomialIdeal::zero()
    } else {
        MonomialIdeal::new(gens.iter().map(|g| m(g)).collect()).unwrap()
    }
}

/// The three-oracle corpus: (field, variables, ideal, module relations).
fn oracle_corpus() -> Vec<(FieldSpec, usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2).unwrap();
    vec![
        (q, 1, vec![vec![1]], vec![]),
        (f2, 1, vec![vec![2]], vec![]),
        (q, 2, vec![vec![1, 0]], vec![]),
        (q, 2, vec![vec![1, 0]], vec![vec![0, 2]]),
        (f2, 2, vec![vec![2, 1]], vec![]),
        (q, 2, vec![vec![2, 0], vec![0, 3]], vec![]),
        (f2, 2, vec![vec![2, 0], vec![0, 3]], vec![]),
        (q, 2, vec![vec![2, 0], vec![0, 2]], vec![]),
        (q, 2, vec![vec![2, 0], vec![0, 3]], vec![vec![0, 5]]),
        (f2, 2, vec![vec![1, 1]], vec![]),
        (f2, 2, vec![vec![3, 0], vec![0, 2]], vec![]),
        (q, 3, vec![vec![1, 1, 1]], vec![]),
        (q, 3, vec![vec![2, 1, 0], vec![0, 1, 2]], vec![]),
        (f2, 3, vec![vec![1, 1, 0]], vec![]),
    ]
}

#[test]
fn criterion_1_integer_example() {
    let start = Instant::now();
    let mut pass = true;
    for p in [2u64, 3, 5] {
        let z = PLocalObject::new(p, vec![Atom::Z]);
        let g = gamma_p(&z);
        pass &= g.zero.is_zero() && g.one.iso_eq(&PLocalObject::new(p, vec![Atom::Zpinf]));
        for a in ALL_ATOMS {
            let obj = PLocalObject::new(p, vec![a.clone()]);
            let l = lambda_p(&obj);
            let (hom, ext) = hom_ext(&Atom::Zpinf, &obj).unwrap();
            pass &= l.zero.iso_eq(&ext) && l.one.iso_eq(&hom);
        }
    }
    report(
        1,
        "gamma_p(Z) and lambda_p atoms over Z",
        pass,
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_three_oracle_agreement() {
    let start = Instant::now();
    let corpus = oracle_corpus();
    assert!(corpus.len() >= 12);
    let mut pass = true;
    for (field, n, gens, rel) in &corpus {
        let ring = RingSpec::polynomial(*field, *n);
        let i = ideal(gens);
        let rel = ideal(rel);
        let window = DegreeBox::cube(*n, -4, 4);
        let direct = local_cohomology(&ring, &i, &rel, &window).unwrap();
        let koszul = koszul_colimit_cohomology(&ring, &i, &rel, &window, 6).unwrap();
        let ext = stable_ext_table(&ring, &i, &rel, &window, 6).unwrap();
        if direct.first_difference(&koszul).is_some() || direct.first_difference(&ext).is_some() {
            pass = false;
        }
    }
    report(
        2,
        "local = Koszul colimit = stable Ext on 14 instances",
        pass,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_3_maximal_ideal_plane() {
    let start = Instant::now();
    let ring = RingSpec::polynomial(FieldSpec::Rationals, 2);
    let i = ideal(&[vec![1, 0], vec![0, 1]]);
    let window = DegreeBox::cube(2, -4, 4);
    let t = local_cohomology(&ring, &i, &MonomialIdeal::zero(), &window).unwrap();
    let mut pass = true;
    for a in window.degrees() {
        let expect_h2 = usize::from(a[0] <= -1 && a[1] <= -1);
        pass &= t.get(0, &a) == 0 && t.get(1, &a) == 0 && t.get(2, &a) == expect_h2;
    }
    report(
        3,
        "H^2 of the plane at the maximal ideal",
        pass,
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_4_radical_invariance() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4ad1ca1);
    let ring = RingSpec::polynomial(FieldSpec::Rationals, 2);
    let window = DegreeBox::cube(2, -3, 3);
    let mut pass = true;
    for _ in 0..25 {
        let count = rng.gen_range(1..=2);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| {
                let e = [rng.gen_range(0..=2), rng.gen_range(0..=2)];
                if e == [0, 0] {
                    m(&[1, 0])
                } else {
                    m(&[e[0], e[1]])
                }
            })
            .collect();
        // raise each generator to a random power, optionally append products
        // of pairs; neither changes the radical
        let mut gens2: Vec<Monomial> = gens.iter().map(|g| g.pow(rng.gen_range(1..=2))).collect();
        if gens.len() == 2 && rng.gen_bool(0.5) {
            gens2.push(gens[0].mul(&gens[1]));
        }
        let rep =
            radical_invariance_check(&ring, &gens, &gens2, &MonomialIdeal::zero(), &window)
                .unwrap();
        pass &= rep.pass;
    }
    report(
        4,
        "25 randomized equal-radical pairs agree",
        pass,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_grothendieck_bounds() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x960);
    let mut pass = true;
    for _ in 0..50 {
        let n = rng.gen_range(1..=2usize);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                let mut e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
                if e.iter().all(|&x| x == 0) {
                    e[0] = 1;
                }
                e
            })
            .collect();
        let rel: Vec<Vec<i64>> = if rng.gen_bool(0.3) {
            vec![(0..n)
                .map(|i| if i == 0 { rng.gen_range(1..=3) } else { 0 })
                .collect()]
        } else {
            vec![]
        };
        let ring = RingSpec::polynomial(FieldSpec::Rationals, n);
        let window = DegreeBox::cube(n, -3, 3);
        let rep = vanishing_report(&ring, &ideal(&gens), &ideal(&rel), &window).unwrap();
        pass &= rep.upper_bound_ok && (rep.computed_depth.is_none() || rep.lower_witnessed);
    }
    report(
        5,
        "vanishing above Krull dimension on 50 random instances",
        pass,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_6_exact_sequences() {
    let start = Instant::now();
    let mut pass = true;
    for (field, n, gens, rel) in &oracle_corpus() {
        let ring = RingSpec::polynomial(*field, *n);
        let i = ideal(gens);
        let rel = ideal(rel);
        let window = DegreeBox::cube(*n, -4, 4);
        let rep = les_check(&ring, &i, &rel, &window).unwrap();
        pass &= rep.pass;
        let cech = build_cech_with(&ring, i.generators(), &rel).unwrap();
        pass &= euler_conservation_check(&cech, &window).unwrap().is_none();
    }
    report(
        6,
        "four-term sequence and Euler conservation on the corpus",
        pass,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_gorenstein_frobenius() {
    let start = Instant::now();
    let groups: Vec<(&str, Vec<Vec<usize>>)> = vec![
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("C6", cyclic_group(6)),
        ("C8", cyclic_group(8)),
        ("C9", cyclic_group(9)),
        ("C12", cyclic_group(12)),
        ("C16", cyclic_group(16)),
        ("C2xC2", product_group(&cyclic_group(2), &cyclic_group(2))),
        ("C2xC4", product_group(&cyclic_group(2), &cyclic_group(4))),
        ("C2xC8", product_group(&cyclic_group(2), &cyclic_group(8))),
        ("C4xC4", product_group(&cyclic_group(4), &cyclic_group(4))),
        (
            "C2xC2xC2",
            product_group(&cyclic_group(2), &product_group(&cyclic_group(2), &cyclic_group(2))),
        ),
        ("C3xC3", product_group(&cyclic_group(3), &cyclic_group(3))),
        ("D4", dihedral_group(4)),
        ("D8", dihedral_group(8)),
        ("Q8", quaternion_group()),
    ];
    let mut pass = true;
    for field in [FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
        for (name, table) in &groups {
            let a = group_algebra(table, field).unwrap();
            let frob = frobenius_check(&a, None).unwrap();
            let dims = ext_k_a(&a, 6).unwrap();
            let rigid = dims[0] == 1 && dims[1..].iter().all(|&d| d == 0);
            if !frob.frobenius || !rigid {
                eprintln!("group {name} over char {}: frob={} ext={dims:?}", field.characteristic(), frob.frobenius);
                pass = false;
            }
        }
    }
    let f2 = FieldSpec::prime(2).unwrap();
    let gor = monomial_algebra(f2, 2, &ideal(&[vec![2, 0], vec![0, 2]])).unwrap();
    let fat = monomial_algebra(f2, 2, &ideal(&[vec![2, 0], vec![1, 1], vec![0, 2]])).unwrap();
    pass &= socle_dim(&gor) == 1 && socle_dim(&fat) == 2;
    report(
        7,
        "Frobenius group algebras to order 16 and socle detection",
        pass,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_koszul_duality() {
    let start = Instant::now();
    let a = exterior_algebra(FieldSpec::Rationals, 1);
    let ext = ext_algebra(&a, 10).unwrap();
    let mut pass = ext.dims == vec![1; 11];
    for n in 1..10 {
        pass &= ext.products[&(n, 0, 1, 0)].iter().any(|c| !c.is_zero());
    }
    report(
        8,
        "Ext algebra of the exterior algebra is polynomial",
        pass,
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_9_idempotence_and_truncations() {
    let start = Instant::now();
    let mut samples: Vec<PLocalObject> = ALL_ATOMS
        .iter()
        .map(|a| PLocalObject::new(3, vec![a.clone()]))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1de3);
    for _ in 0..50 {
        let len = rng.gen_range(1..=4);
        let atoms = (0..len)
            .map(|_| match &ALL_ATOMS[rng.gen_range(0..ALL_ATOMS.len())] {
                Atom::ZModPk(_) => Atom::ZModPk(rng.gen_range(1..=4)),
                a => a.clone(),
            })
            .collect();
        samples.push(PLocalObject::new(3, atoms));
    }
    let laws = functor_laws_check(&samples).unwrap();
    let mut pass = laws.pass;
    for b in ALL_ATOMS {
        let obj = PLocalObject::new(3, vec![b.clone()]);
        let (hom, ext) = hom_ext(&Atom::Zpinf, &obj).unwrap();
        for n_max in [8, 12] {
            let (oh, oe) = truncation_oracle(&b, n_max);
            pass &= hom.iso_eq(&PLocalObject::new(3, oh));
            pass &= ext.iso_eq(&PLocalObject::new(3, oe));
        }
    }
    report(
        9,
        "functor laws and truncated-limit oracle",
        pass,
        start.elapsed(),
        Duration::from_secs(60),
    );
}
