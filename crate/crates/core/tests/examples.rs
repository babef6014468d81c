mod common;

use common::{fixture, fixture_tableau};
use grothlib::enumerate::*;
use grothlib::json::{tableau_from_json, tableau_to_json};
use grothlib::*;
use serde_json::Value;

fn p(parts: &[u32]) -> Partition {
    partition(parts)
}

fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
    SkewShape::new(p(outer), p(inner)).unwrap()
}

fn contains(shape_stream: impl FnOnce(&mut dyn FnMut(&Tableau)), target: &Tableau) -> bool {
    let mut found = false;
    shape_stream(&mut |t| found |= t == target);
    found
}

#[test]
fn overfull_example() {
    let t = fixture_tableau("ot_example.json");
    assert_eq!(t.shape(), &SkewShape::straight(p(&[3, 3, 2])));
    assert!(validate(&t, Family::Ot));
    assert!(!validate(&t, Family::Pt));
    assert_eq!(t.right_weight().coords(), &[1, 3, 3]);
    assert_eq!(t.overweight().unwrap().coords(), &[3, 1, 3]);
    // fifteen entries in eight boxes
    assert_eq!(t.entry_count(), 15);
    assert_eq!(t.left_weight().coords(), &[3, 2, 3]);
}

#[test]
fn underfull_example() {
    let t = fixture_tableau("ut_example.json");
    assert_eq!(t.shape(), &SkewShape::straight(p(&[5, 5, 3, 1])));
    assert!(validate(&t, Family::Ut));
    assert_eq!(t.left_weight().coords(), &[3, 1, 2]);
    assert_eq!(t.right_weight().coords(), &[1, 2]);
    assert_eq!(t.underweight().unwrap().coords(), &[2, 1, 1, 1]);
}

#[test]
fn flagged_examples() {
    let oft = fixture_tableau("oft_example.json");
    let uft = fixture_tableau("uft_example.json");
    let shape = skew(&[6, 6, 5, 4], &[4, 3, 2, 1]);
    assert_eq!(oft.shape(), &shape);
    assert_eq!(uft.shape(), &shape);
    assert_eq!(oft.flag_weight(Family::Oft).unwrap().coords(), &[5, 4, 1, 1]);
    assert_eq!(uft.flag_weight(Family::Uft).unwrap().coords(), &[3, 3, 2, 1, 2]);
    assert!(contains(|v| visit_oft(&shape, v), &oft));
    assert!(contains(|v| visit_uft(&shape, v), &uft));
}

#[test]
fn underfull_stream_contains_example() {
    let t = fixture_tableau("ut_example.json");
    assert!(contains(|v| visit_ut(&p(&[5, 5, 3, 1]), EnumBounds::new(3, 0), v), &t));
}

#[test]
fn overfull_stream_contains_example() {
    let t = fixture_tableau("ot_example.json");
    assert!(contains(|v| visit_ot(&p(&[3, 3, 2]), EnumBounds::new(3, 7), v), &t));
}

#[test]
fn swap_example_orders() {
    let ex = fixture("swap_example.json");
    let prec = TotalOrder::parse(ex["prec"].as_str().unwrap()).unwrap();
    let s = common::tableau(&ex["s"]);
    assert!(validate_pt_order(&s, &prec).unwrap());
    assert!(validate_pt_order(&Tableau::blank(SkewShape::straight(Partition::empty())), &prec).unwrap());
    let column = Tableau::from_letter_rows(&[vec![Letter::unprimed(1)], vec![Letter::unprimed(1)]]).unwrap();
    assert!(!validate_pt_order(&column, &TotalOrder::standard(2)).unwrap());
}

#[test]
fn stream_counts() {
    assert_eq!(pt_tableaux(&p(&[1]), 2).len(), 4);
    assert_eq!(pt_tableaux(&p(&[1, 1]), 2).len(), 8);
    assert_eq!(ut_tableaux(&p(&[1]), EnumBounds::new(2, 0)).len(), 4);
    assert_eq!(ot_tableaux(&p(&[1]), EnumBounds::new(1, 0)).len(), 2);
    assert_eq!(oft_tableaux(&skew(&[2], &[1])).len(), 1);
    assert_eq!(uft_tableaux(&skew(&[2], &[1])).len(), 1);
    assert_eq!(pft_tableaux(&skew(&[2], &[1])).len(), 2);
    assert!(oft_tableaux(&skew(&[2, 1], &[1])).is_empty());
    assert_eq!(pft_tableaux(&skew(&[3, 1], &[3, 1])).len(), 1);
}

#[test]
fn series_examples() {
    let one = p(&[1]);
    let g: Series = groth(&one, Truncation::new(0, 2, Some(2))).unwrap();
    assert_eq!(g.to_text(), "y1 + y2 - z1*y1*y2");
    let g: Series = groth(&Partition::empty(), Truncation::new(2, 2, Some(3))).unwrap();
    assert_eq!(g.to_text(), "1");
    let g: Series = groth_dual(&one, Truncation::new(1, 1, None)).unwrap();
    assert_eq!(g.to_latex(), "x_1+y_1");
    let g: Series = groth_dual(&p(&[2]), Truncation::new(1, 0, None)).unwrap();
    assert_eq!(g.to_latex(), "x_1^{2}+z_1x_1");
    let a: Series = refined(Variant::A1, &one, 2, Some(2), false).unwrap();
    assert_eq!(a.to_latex(), "x_1+x_2-z_1x_1x_2");
    let a: Series = refined(Variant::A1, &one, 2, Some(2), true).unwrap();
    assert_eq!(a.to_latex(), "x_1+x_2-x_1x_2");
    let b: Series = refined(Variant::B2, &one, 1, None, false).unwrap();
    assert_eq!(b.to_latex(), "x_1");
}

#[test]
fn schur_examples() {
    assert_eq!(schur_poly::<Integer>(&p(&[1]), 2).to_latex(), "x_1+x_2");
    assert_eq!(schur_poly::<Integer>(&p(&[1, 1]), 2).to_latex(), "x_1x_2");
    assert_eq!(schur_poly::<Integer>(&p(&[2, 1]), 3).terms().map(|(_, c)| c.clone()).sum::<Integer>(), 8.into());

    let g: Series = refined(Variant::B2, &p(&[2]), 2, None, false).unwrap();
    let e = expand_schur(&g, Alphabet::X).unwrap();
    assert_eq!(e.to_latex(), "z_1s_{1}+s_{2}");
    assert_eq!(e.terms(), schur_expansion_via_flags::<Integer>(&p(&[2]), Flagged::Gdual, false, 0).terms());
    let g: Series = refined(Variant::A1, &p(&[1]), 2, Some(2), false).unwrap();
    assert_eq!(expand_schur(&g, Alphabet::X).unwrap().to_latex(), "s_{1}-z_1s_{1,1}");
    let flags = schur_expansion_via_flags::<Integer>(&p(&[1]), Flagged::G, false, 2);
    assert_eq!(flags.to_latex(), "s_{1}-z_1s_{2}");
    let flags = schur_expansion_via_flags::<Integer>(&p(&[1]), Flagged::Gdual, false, 0);
    assert_eq!(flags.to_latex(), "s_{1}");
}

#[test]
fn double_expansion_of_single_box() {
    let mut f = Series::zero(Truncation::new(1, 1, None));
    for t in pt_tableaux(&p(&[1]), 1) {
        f.add_term(Monomial::new(t.left_weight(), t.right_weight(), vec![]), 1.into()).unwrap();
    }
    let e = expand_schur_xy(&f).unwrap();
    let keys: Vec<_> = e.terms().keys().cloned().collect();
    assert_eq!(keys, vec![(Partition::empty(), p(&[1])), (p(&[1]), Partition::empty())]);
}

#[test]
fn omega_examples() {
    let mut e = SchurExpansion::new(Alphabet::X, 3);
    e.add_term(p(&[2, 1]), ZPoly::monomial(WeightVector::new(vec![1]), 1.into()));
    e.add_term(p(&[3]), ZPoly::constant(2.into()));
    let w = omega(&e);
    assert_eq!(w.coeff(&p(&[2, 1])), e.coeff(&p(&[2, 1])));
    assert_eq!(w.coeff(&p(&[1, 1, 1])), ZPoly::constant(2.into()));
    assert_eq!(omega(&w).terms(), e.terms());
}

fn tableau_values(v: &Value, out: &mut Vec<Value>) {
    match v {
        Value::Object(m) if m.contains_key("cells") => out.push(v.clone()),
        Value::Object(m) => m.values().for_each(|x| tableau_values(x, out)),
        Value::Array(a) => a.iter().for_each(|x| tableau_values(x, out)),
        _ => {}
    }
}

#[test]
fn fixtures_round_trip() {
    let dir = format!("{}/tests/fixtures", env!("CARGO_MANIFEST_DIR"));
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let mut tabs = Vec::new();
        tableau_values(&v, &mut tabs);
        for t in tabs {
            let parsed = tableau_from_json(&t.to_string()).unwrap();
            let back: Value = serde_json::from_str(&tableau_to_json(&parsed)).unwrap();
            assert_eq!(back, t, "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 30, "{seen}");
}
