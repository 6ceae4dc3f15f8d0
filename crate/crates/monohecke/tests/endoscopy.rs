use std::collections::BTreeSet;

use monohecke::coxeter::CoxeterSystem;
use monohecke::wset::{bfs_lengths, builtin_wsets, subgroup, WSet};
use rayon::prelude::*;

/// Check the structure of every endoscopic group of `(w, o)`; returns the
/// number of points checked.
fn check_structure(w: &CoxeterSystem, label: &str, o: &WSet) -> usize {
    let refl = w.reflections();
    o.points()
        .into_par_iter()
        .map(|p| {
            let g = o.endoscopic_group(w, p);
            let elems: BTreeSet<usize> = g.elements.iter().copied().collect();
            // monodromic length is the Coxeter length over the endosimples
            let bfs = bfs_lengths(w, &g.simples);
            assert_eq!(bfs.keys().copied().collect::<BTreeSet<_>>(), elems, "{label} p={p}");
            for (&x, &l) in &bfs {
                assert_eq!(o.mono_length_elem(w, p, x), l, "{label} p={p} x={x}");
            }
            // generated by the reflections fixing the point
            let stab = o.stabilizer(w, p);
            let gens: Vec<usize> = stab.iter().copied().filter(|x| refl.contains(x)).collect();
            assert_eq!(subgroup(w, &gens).into_iter().collect::<BTreeSet<_>>(), elems, "{label} p={p}");
            // normal in the stabilizer
            for &s in &stab {
                let si = w.inverse(s);
                for &x in &g.simples {
                    assert!(elems.contains(&w.mul(w.mul(s, x), si)), "{label} p={p}");
                }
            }
            1
        })
        .sum()
}

#[test]
fn structure_on_all_builtin_sets() {
    for name in ["A1", "A2", "B2", "G2", "I2(5)", "A3", "B3", "H3"] {
        let w = CoxeterSystem::preset(name).unwrap();
        for (label, o) in builtin_wsets(&w) {
            assert!(check_structure(&w, &format!("{name} {label}"), &o) > 0);
        }
    }
}

#[test]
fn named_examples() {
    let b2 = CoxeterSystem::preset("B2").unwrap();
    let o = WSet::parse(&b2, "cosets:s,tst").unwrap();
    let g = o.endoscopic_group(&b2, 0);
    assert_eq!(g.type_name, "A1×A1");
    assert_eq!(g.simples.len(), 2);
    let reg = WSet::regular(&b2);
    let g = reg.endoscopic_group(&b2, 0);
    assert_eq!(g.elements.len(), 1);
    assert_eq!(g.type_name, "trivial");
    let triv = WSet::trivial(&b2);
    assert_eq!(triv.endoscopic_group(&b2, 0).type_name, "B2");
}
