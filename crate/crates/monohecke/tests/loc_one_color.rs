use monohecke::coxeter::CoxeterSystem;
use monohecke::leaves::graded_hom_rank;
use monohecke::loc::*;
use monohecke::ring::{RatFunc, Ring};

fn bits(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}

#[test]
fn neutral_tables_verbatim() {
    let a = alpha();
    let ia = a.inverse().unwrap();
    let z = RatFunc::zero();
    let one = RatFunc::one();
    let m = |k| gen_matrix(&k, true).unwrap().entries;
    assert_eq!(m(GenKind::UpperDot), vec![vec![a.clone(), z.clone()]]);
    assert_eq!(m(GenKind::LowerDot), vec![vec![one.clone()], vec![z.clone()]]);
    assert_eq!(m(GenKind::Cap), vec![vec![a.clone(), z.clone(), z.clone(), a.clone()]]);
    assert_eq!(m(GenKind::Cup), vec![vec![ia.clone()], vec![z.clone()], vec![z.clone()], vec![ia.negate()]]);
    assert_eq!(m(GenKind::Merge)[0], vec![one.clone(), z.clone(), z.clone(), one.clone()]);
    let nu = m(GenKind::Split);
    assert_eq!(nu[2], vec![z.clone(), ia.negate()]);
    assert_eq!(nu[3], vec![ia.negate(), z]);
}

#[test]
fn non_neutral_tables_and_errors() {
    assert_eq!(gen_matrix(&GenKind::Cap, false).unwrap().entries, vec![vec![RatFunc::one()]]);
    assert_eq!(gen_matrix(&GenKind::Cup, false).unwrap().entries, vec![vec![RatFunc::one()]]);
    for k in [GenKind::UpperDot, GenKind::LowerDot, GenKind::Merge, GenKind::Split] {
        assert!(gen_matrix(&k, false).is_err());
    }
    assert!(GenKind::parse("bogus").is_err());
}

#[test]
fn composition_examples() {
    let eps = gen_matrix(&GenKind::UpperDot, true).unwrap();
    let eta = gen_matrix(&GenKind::LowerDot, true).unwrap();
    let barbell = eps.compose(&eta).unwrap();
    assert_eq!(barbell.entries, vec![vec![alpha()]]);
    assert_eq!(barbell.degree, 2);
    let cap = gen_matrix(&GenKind::Cap, false).unwrap();
    let cup = gen_matrix(&GenKind::Cup, false).unwrap();
    assert_eq!(cap.compose(&cup).unwrap(), LocMor::identity(BSObject::empty()));
    assert!(eps.compose(&eps).is_err());
    let id = LocMor::identity(BSObject::new(1, true));
    assert_eq!(id.compose(&eta).unwrap(), eta);
    assert_eq!(id.tensor(&id).unwrap(), LocMor::identity(BSObject::new(2, true)));
}

#[test]
fn one_color_relations_hold() {
    for neutral in [true, false] {
        let report = check_one_color_relations(neutral);
        assert!(report.len() >= 4);
        for r in report {
            assert!(r.holds, "neutral = {neutral}: {}", r.name);
        }
    }
}

#[test]
fn light_leaf_examples() {
    let ll = ll_matrix_one_color(1, true, &bits("1")).unwrap();
    assert_eq!(ll, LocMor::identity(BSObject::new(1, true)));
    assert_eq!(ll_matrix_one_color(2, true, &bits("10")).unwrap().degree, -1);
    assert_eq!(ll_matrix_one_color(2, true, &bits("00")).unwrap().degree, 2);
    assert!(ll_matrix_one_color(2, false, &bits("10")).is_err());
}

#[test]
fn path_dominance_upper_triangularity() {
    for neutral in [true, false] {
        for n in 0..=6 {
            let rep = check_triangularity(n, neutral).unwrap();
            assert!(rep.ok(), "{rep:?}");
        }
    }
}

#[test]
fn double_leaf_degrees() {
    for neutral in [true, false] {
        for x in 0..=5usize {
            for y in 0..=5usize {
                if !neutral && (x + y) % 2 == 1 {
                    continue;
                }
                for (e, f, dl) in double_leaves(x, y, neutral).unwrap() {
                    let want = decorate(x, &e).defect + decorate(y, &f).defect;
                    assert_eq!(dl.degree, want as i64);
                    assert!(dl.is_consistent(), "{x} {y} {e:?} {f:?}");
                }
            }
        }
    }
}

#[test]
fn double_leaves_are_independent_and_match_hom_rank() {
    let w = CoxeterSystem::preset("A1").unwrap();
    for x in 0..=4usize {
        for y in 0..=4usize {
            let (rank, count) = double_leaf_rank(x, y, true, (x * 10 + y) as u64).unwrap();
            assert_eq!(rank, count, "x = {x}, y = {y}");
            let all_x: Vec<usize> = (0..x).collect();
            let all_y: Vec<usize> = (0..y).collect();
            let g = graded_hom_rank(&w, &vec![0; x], &all_x, &vec![0; y], &all_y);
            let total: i64 = g.terms().map(|(_, c)| i64::try_from(c).unwrap()).sum();
            assert_eq!(total as usize, count);
        }
    }
}

#[test]
fn demazure_recursion() {
    for f in [delta(), delta().pow(2), alpha().times(&delta())] {
        let d = demazure(&f);
        assert_eq!(alpha().times(&d), f.minus(&reflect(&f)));
    }
}
