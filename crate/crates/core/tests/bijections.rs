mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{fixture, tableau};
use grothlib::bijections::*;
use grothlib::enumerate::*;
use grothlib::*;

#[test]
fn rsk_worked_example() {
    let ex = fixture("rsk_example.json");
    let input = tableau(&ex["input"]);
    let (pair, trace) = rsk_forward_traced(&input).unwrap();
    assert_eq!(pair.p, tableau(&ex["p"]));
    assert_eq!(pair.q, tableau(&ex["q"]));
    let panels: Vec<Tableau> = ex["trace"].as_array().unwrap().iter().map(tableau).collect();
    assert_eq!(trace, panels);
    assert_eq!(rsk_backward(&pair).unwrap(), input);
}

#[test]
fn jdt_worked_example() {
    let ex = fixture("jdt_example.json");
    let input = tableau(&ex["input"]);
    let (pair, trace) = jdt_forward_traced(&input).unwrap();
    assert_eq!(pair.p, tableau(&ex["p"]));
    assert_eq!(pair.q, tableau(&ex["q"]));
    let panels: Vec<Tableau> = ex["trace"].as_array().unwrap().iter().map(tableau).collect();
    assert_eq!(trace, panels);
    assert_eq!(jdt_backward(&pair).unwrap(), input);
}

#[test]
fn trivial_pairs() {
    let t =
        Tableau::from_letter_rows(&[vec![Letter::primed(1), Letter::unprimed(1)], vec![Letter::unprimed(2)]]).unwrap();
    let pair = rsk_forward(&t).unwrap();
    assert_eq!(pair.p, t);
    assert_eq!(pair.q.shape().size(), 0);
    assert_eq!(rsk_backward(&pair).unwrap(), t);
    let pair = jdt_forward(&t).unwrap();
    assert_eq!(pair.p, t);
    assert_eq!(pair.q.shape().size(), 0);
    assert_eq!(jdt_backward(&pair).unwrap(), t);
}

#[test]
fn rsk_weights_and_round_trip() {
    for mu in [partition(&[2, 1]), partition(&[2, 2])] {
        let all = ot_tableaux(&mu, EnumBounds::new(3, 2));
        let mut images = BTreeSet::new();
        for t in &all {
            let pair = rsk_forward(t).unwrap();
            assert!(validate(&pair.p, Family::Pt), "{t}");
            assert!(validate(&pair.q, Family::Oft), "{t}");
            assert_eq!(pair.p.left_weight(), t.left_weight());
            assert_eq!(pair.p.right_weight(), t.right_weight());
            assert_eq!(pair.q.flag_weight(Family::Oft).unwrap(), t.overweight().unwrap());
            assert_eq!(&rsk_backward(&pair).unwrap(), t);
            assert!(images.insert((pair.p, pair.q)));
        }
    }
}

#[test]
fn rsk_image_is_every_pair() {
    // PT(λ) with letters ≤ n and OFT(λ/μ) with surplus ≤ b, for every λ ⊇ μ
    for mu in [partition(&[1]), partition(&[2]), partition(&[1, 1]), partition(&[2, 1])] {
        let (n, b) = (2, 2);
        let forward: BTreeSet<(Tableau, Tableau)> = ot_tableaux(&mu, EnumBounds::new(n, b))
            .iter()
            .map(|t| {
                let p = rsk_forward(t).unwrap();
                (p.p, p.q)
            })
            .collect();
        let mut pairs = BTreeSet::new();
        for lambda in Partition::up_to_size(mu.size() + b) {
            if lambda.len() != mu.len() || !lambda.contains(&mu) {
                continue;
            }
            let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
            for q in oft_tableaux(&shape) {
                for p in pt_tableaux(&lambda, n) {
                    pairs.insert((p, q.clone()));
                }
            }
        }
        assert_eq!(forward, pairs, "mu = {mu}");
    }
}

#[test]
fn jdt_weights_and_round_trip() {
    for lambda in [partition(&[3, 2]), partition(&[3, 3, 1])] {
        let all = ut_tableaux(&lambda, EnumBounds::new(3, 0));
        assert!(!all.is_empty());
        let mut images = BTreeSet::new();
        for t in &all {
            let pair = jdt_forward(t).unwrap();
            assert!(validate(&pair.p, Family::Pt), "{t}");
            assert!(validate(&pair.q, Family::Uft), "{t}");
            assert_eq!(pair.p.left_weight(), t.left_weight());
            assert_eq!(pair.p.right_weight(), t.right_weight());
            assert_eq!(pair.q.flag_weight(Family::Uft).unwrap(), t.underweight().unwrap());
            assert_eq!(&jdt_backward(&pair).unwrap(), t);
            assert!(images.insert((pair.p, pair.q)));
        }
    }
}

#[test]
fn jdt_image_is_every_pair() {
    for lambda in Partition::up_to_size(4) {
        let n = 2;
        let forward: BTreeSet<(Tableau, Tableau)> = ut_tableaux(&lambda, EnumBounds::new(n, 0))
            .iter()
            .map(|t| {
                let p = jdt_forward(t).unwrap();
                (p.p, p.q)
            })
            .collect();
        let mut pairs = BTreeSet::new();
        for mu in lambda.subpartitions() {
            let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
            for q in uft_tableaux(&shape) {
                for p in pt_tableaux(&mu, n) {
                    pairs.insert((p, q.clone()));
                }
            }
        }
        assert_eq!(forward, pairs, "lambda = {lambda}");
    }
}

#[test]
fn backward_rejects_invalid_pairs() {
    // recording tableau with more rows than its inner shape
    let p = Tableau::from_letter_rows(&[vec![Letter::primed(1)], vec![Letter::unprimed(1)]]).unwrap();
    let q = tableau(&serde_json::json!({"outer":[1,1],"inner":[1],"cells":[{"row":2,"col":1,"unprimed":[1]}]}));
    assert!(rsk_backward(&RskPair { p: p.clone(), q }).is_err());
    // recording tableau whose outer shape is not P's
    let q = tableau(&serde_json::json!({"outer":[2],"inner":[1],"cells":[{"row":1,"col":2,"unprimed":[1]}]}));
    assert!(rsk_backward(&RskPair { p: p.clone(), q }).is_err());
    let q = tableau(&serde_json::json!({"outer":[2,1],"inner":[1,1],"cells":[{"row":1,"col":2,"primed":[2]}]}));
    assert!(jdt_backward(&JdtPair { p, q }).is_err());
}

#[test]
fn swap_worked_example() {
    let ex = fixture("swap_example.json");
    let prec = TotalOrder::parse(ex["prec"].as_str().unwrap()).unwrap();
    let lhd = TotalOrder::parse(ex["lhd"].as_str().unwrap()).unwrap();
    let s = tableau(&ex["s"]);
    let t = tableau(&ex["t"]);
    assert!(validate_pt_order(&s, &prec).unwrap());
    assert!(validate_pt_order(&t, &lhd).unwrap());
    assert_eq!(order_swap_up(&s, &prec, &lhd).unwrap(), t);
    assert_eq!(order_swap_down(&t, &lhd, &prec).unwrap(), s);
}

#[test]
fn swap_without_the_letters_is_identity() {
    let prec = TotalOrder::parse("1',1,2,3,2',4,3',4'").unwrap();
    let lhd = TotalOrder::parse("1',1,2,2',3,4,3',4'").unwrap();
    let t =
        Tableau::from_letter_rows(&[vec![Letter::primed(1), Letter::unprimed(1)], vec![Letter::unprimed(2)]]).unwrap();
    assert_eq!(order_swap_up(&t, &prec, &lhd).unwrap(), t);
    assert!(order_swap_up(&t, &lhd, &prec).is_err());
    assert!(order_swap_up(&t, &prec, &TotalOrder::standard(4)).is_err());
}

fn weights(t: &Tableau) -> (WeightVector, WeightVector) {
    (t.left_weight(), t.right_weight())
}

#[test]
fn adjacent_swaps_are_weight_preserving_bijections() {
    let shape = SkewShape::straight(partition(&[3, 2]));
    let prec = TotalOrder::parse("1',1,2,3,2',4,3',4'").unwrap();
    for k in 0..prec.sequence().len() - 1 {
        let lhd = prec.swapped(k);
        let source = pt_order_tableaux(&shape, &prec, 4).unwrap();
        let target: BTreeSet<Tableau> = pt_order_tableaux(&shape, &lhd, 4).unwrap().into_iter().collect();
        let mut image = BTreeSet::new();
        for t in &source {
            let u = swap_adjacent(t, &prec, &lhd).unwrap();
            assert_eq!(weights(&u), weights(t));
            assert_eq!(&swap_adjacent(&u, &lhd, &prec).unwrap(), t);
            image.insert(u);
        }
        assert_eq!(image, target, "swap at position {k}");
    }
}

#[test]
fn reorder_examples() {
    let shape = SkewShape::straight(partition(&[2, 1]));
    let std2 = TotalOrder::standard(2);
    let unprimed_first = TotalOrder::unprimed_first(2);
    let image: BTreeSet<Tableau> = pt_order_tableaux(&shape, &std2, 2)
        .unwrap()
        .iter()
        .map(|t| {
            assert_eq!(&reorder(t, &std2, &std2).unwrap(), t);
            reorder(t, &std2, &unprimed_first).unwrap()
        })
        .collect();
    let target: BTreeSet<Tableau> = pt_order_tableaux(&shape, &unprimed_first, 2).unwrap().into_iter().collect();
    assert_eq!(image, target);
    assert!(reorder(&Tableau::blank(shape), &std2, &TotalOrder::standard(3)).is_err());
}

#[test]
fn reorder_between_the_three_orders() {
    let orders = [TotalOrder::standard(3), TotalOrder::unprimed_first(3), TotalOrder::primed_first(3)];
    let lambda = partition(&[2, 2]);
    for t in pt_tableaux(&lambda, 3) {
        for to in &orders[1..] {
            let u = reorder(&t, &orders[0], to).unwrap();
            assert_eq!(weights(&u), weights(&t));
            assert!(validate_pt_order(&u, to).unwrap());
        }
    }
}

#[test]
fn iota_worked_example() {
    let ex = fixture("iota_example.json");
    let a = tableau(&ex["a"]);
    let b = tableau(&ex["b"]);
    assert!(validate(&a, Family::Pft));
    assert_eq!(iota_box(&a), Some((3, 7)));
    assert_eq!(iota(&a).unwrap(), b);
    assert_eq!(iota(&b).unwrap(), a);
}

#[test]
fn iota_single_box() {
    let shape = SkewShape::new(partition(&[2]), partition(&[1])).unwrap();
    let all = pft_tableaux(&shape);
    assert_eq!(all.len(), 2);
    assert_eq!(iota(&all[0]).unwrap(), all[1]);
}

fn skew_shapes_with_equal_rows(max: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for lambda in Partition::up_to_size(max) {
        for mu in lambda.subpartitions() {
            if mu != lambda && mu.len() == lambda.len() {
                out.push(SkewShape::new(lambda.clone(), mu).unwrap());
            }
        }
    }
    out
}

#[test]
fn iota_is_a_sign_reversing_matching() {
    for shape in skew_shapes_with_equal_rows(6) {
        let all = pft_tableaux(&shape);
        let mut sum: BTreeMap<WeightVector, i64> = BTreeMap::new();
        for t in &all {
            let u = iota(t).unwrap();
            assert_ne!(&u, t);
            assert_eq!(&iota(&u).unwrap(), t);
            assert_eq!(t.left_weight().add(&t.right_weight()), u.left_weight().add(&u.right_weight()));
            assert_eq!(t.unprimed_count() % 2, 1 - u.unprimed_count() % 2);
            let s = if t.unprimed_count() % 2 == 0 { 1 } else { -1 };
            *sum.entry(t.left_weight().add(&t.right_weight())).or_default() += s;
        }
        assert!(sum.values().all(|&v| v == 0), "{shape}");
    }
}

#[test]
fn superimpose_and_split_are_inverse() {
    let mut checked = 0;
    for shape in skew_shapes_with_equal_rows(5) {
        let (lambda, mu) = (shape.outer(), shape.inner());
        let mut count = 0;
        for rho in lambda.subpartitions() {
            if !rho.contains(mu) || rho.len() != lambda.len() {
                continue;
            }
            let lower = SkewShape::new(rho.clone(), mu.clone()).unwrap();
            let upper = SkewShape::new(lambda.clone(), rho.clone()).unwrap();
            for p in oft_tableaux(&lower) {
                for q in uft_tableaux(&upper) {
                    let r = superimpose(&p, &q).unwrap();
                    assert_eq!(r.left_weight(), p.left_weight());
                    assert_eq!(r.right_weight(), q.right_weight());
                    assert_eq!(r.unprimed_count() as u32, rho.size() - mu.size());
                    assert_eq!(split(&r).unwrap(), (p.clone(), q));
                    count += 1;
                    checked += 1;
                }
            }
        }
        assert_eq!(count, pft_tableaux(&shape).len(), "{shape}");
    }
    assert!(checked > 0);
}

#[test]
fn superimpose_rejects_non_tiling_shapes() {
    let p = Tableau::blank(SkewShape::new(partition(&[2]), partition(&[1])).unwrap());
    let q = Tableau::blank(SkewShape::new(partition(&[3]), partition(&[1])).unwrap());
    assert!(superimpose(&p, &q).is_err());
}
