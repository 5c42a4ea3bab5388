//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! The census is computed once for the whole binary (n <= 14, up to
//! reflection). Criterion 1 compares against the published table verbatim;
//! the exhaustive oracle proves that table wrong in the N2 column at
//! n = 2, 4, 8, 12 (see the verify report), so that single test is expected
//! red while the census itself is pinned by criterion 11.

use std::collections::{BTreeMap, HashSet};
use std::sync::LazyLock;

use sixsphere::circuits::{self, CircuitKind, Tightness};
use sixsphere::enumerate::{self, Census, EnumerationRequest};
use sixsphere::gc;
use sixsphere::named::{self, NamedGraphId};
use sixsphere::symmetry::point_group;
use sixsphere::verify;
use sixsphere::PlanarMap;

static CENSUS: LazyLock<Census> = LazyLock::new(|| {
    enumerate::census(&EnumerationRequest::new(14))
});

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {id:2} {name}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} ({name}): {detail}");
}

#[test]
fn criterion_01_table_reproduction() {
    let r = verify::check_table1(&CENSUS, 12);
    report(1, "table-1 reproduction", r.pass, &r.detail);
}

#[test]
fn criterion_02_13_census_law() {
    let r = verify::check_13_law(&CENSUS);
    report(2, "({1,3},6) census law", r.pass, &r.detail);
}

#[test]
fn criterion_03_gc_laws() {
    let r = verify::check_gc_laws(13);
    report(3, "GC laws", r.pass, &r.detail);
}

#[test]
fn criterion_04_figure_anchors() {
    let six = named::named_graph(NamedGraphId::SixK2).unwrap();
    let mut bad = Vec::new();
    for (k, l, n, group) in [
        (2, 0, 8, "D6h"),
        (2, 1, 14, "D6"),
        (3, 1, 26, "D6"),
        (4, 0, 32, "D6h"),
        (3, 2, 38, "D6"),
    ] {
        let g = &gc::gc(&six, k, l).unwrap().members[0];
        let pg = point_group(g).unwrap().name;
        if g.vertex_count() != n || pg != group {
            bad.push(format!(
                "gc({k},{l}): n={} group={pg}, want n={n} {group}",
                g.vertex_count()
            ));
        }
    }
    for (id, n, group) in [
        (NamedGraphId::SixK2, 6, "D3d"),
        (NamedGraphId::K2Tetrahedron, 12, "Th"),
    ] {
        let m = named::named_graph(id).unwrap();
        for t in gc::tripling_pair(&m).unwrap() {
            let pg = point_group(&t).unwrap().name;
            if t.vertex_count() != n || pg != group {
                bad.push(format!(
                    "tripling({id}): n={} group={pg}, want n={n} {group}",
                    t.vertex_count()
                ));
            }
        }
    }
    report(
        4,
        "figure-anchored constructions",
        bad.is_empty(),
        &if bad.is_empty() {
            "all (n, group) anchors match".to_string()
        } else {
            bad.join("; ")
        },
    );
}

#[test]
fn criterion_05_trifolium_family() {
    let r = verify::check_trifolium_family(20);
    report(5, "trifolium family symmetry", r.pass, &r.detail);
}

#[test]
fn criterion_06_type_ii() {
    let r = verify::check_type_ii(&CENSUS, 10);
    report(6, "type-II theorem", r.pass, &r.detail);
}

#[test]
fn criterion_07_sum_rules() {
    let r = verify::check_sum_rules(&CENSUS);
    report(7, "circuit sum rules", r.pass, &r.detail);
}

fn find_with(
    n: usize,
    p1: usize,
    group: &str,
    tight: Option<(CircuitKind, Tightness)>,
) -> Vec<&'static PlanarMap> {
    CENSUS
        .by_cell
        .get(&(n, p1))
        .map(|v| {
            v.iter()
                .filter(|m| point_group(m).unwrap().name == group)
                .filter(|m| match tight {
                    None => true,
                    Some((kind, status)) => {
                        circuits::tightness(m, kind).unwrap().status == status
                    }
                })
                .collect()
        })
        .unwrap_or_default()
}

#[test]
fn criterion_08_named_circuit_vectors() {
    let mut bad = Vec::new();
    let zvec = |m: &PlanarMap| circuits::zigzags(m).unwrap().vector().render();
    let cvec = |m: &PlanarMap| circuits::central_circuits(m).unwrap().vector().render();

    let six = named::named_graph(NamedGraphId::SixK2).unwrap();
    let td4 = named::named_graph(NamedGraphId::K2Tetrahedron).unwrap();
    let th12 = &gc::tripling_pair(&td4).unwrap()[0];
    let d6_14 = &gc::gc(&six, 2, 1).unwrap().members[0];
    let d6h_8 = &gc::gc(&six, 2, 0).unwrap().members[0];
    for (name, got, want) in [
        ("six-k2 z", zvec(&six), "6^2"),
        ("six-k2 c", cvec(&six), "2^3"),
        ("Td n=4 z", zvec(&td4), "6^4"),
        ("Td n=4 c", cvec(&td4), "3^4"),
        ("Th n=12 z", zvec(th12), "12^6"),
        ("Th n=12 c", cvec(th12), "6^6"),
        ("D6 n=14 z", zvec(d6_14), "14^6"),
        ("D6h n=8 c", cvec(d6h_8), "4^3, 6^2"),
    ] {
        if got != want {
            bad.push(format!("{name}: got [{got}], want [{want}]"));
        }
    }
    // census-identified figure graphs
    let d3_6 = find_with(6, 0, "D3", None);
    if !d3_6.iter().any(|m| zvec(m) == "8^3, 12") {
        bad.push("D3 n=6 z: want [8^3, 12]".into());
    }
    let d2d_8 = find_with(8, 0, "D2d", None);
    if !d2d_8.iter().any(|m| cvec(m) == "4, 5^4") {
        bad.push("D2d n=8 c: want [4, 5^4]".into());
    }
    // the twelve-panel figure, members with n <= 14; two captions corrected
    // by their own sum rules (6_{0,1} carries multiplicity 3; 43 reads 42)
    use CircuitKind::{Central, Zigzag};
    use Tightness::{Tight, WeaklyTight};
    let panels: [(usize, usize, &str, CircuitKind, Tightness, &str); 8] = [
        (11, 0, "D3h", Central, Tight, "5^3, 6_{0,1}^3"),
        (14, 0, "D6", Zigzag, Tight, "14^6"),
        (4, 1, "Cs", Central, Tight, "3, 4_{0,1}, 5_{0,1}"),
        (14, 1, "Cs", Central, WeaklyTight, "5, 7_{0,1}^2, 11_{0,1}, 12_{0,3}"),
        (13, 1, "C1", Zigzag, Tight, "16_{0,1}, 20_{0,1}, 42_{0,9}"),
        (11, 1, "Cs", Zigzag, WeaklyTight, "10, 12, 14_{0,1}^2, 16_{0,1}"),
        (10, 2, "C2", Central, Tight, "8_{0,2}^2, 14_{0,6}"),
        (6, 2, "C2v", Zigzag, WeaklyTight, "6^2, 12_{0,2}^2"),
    ];
    for (n, p1, group, kind, status, want) in panels {
        let members = find_with(n, p1, group, Some((kind, status)));
        let hit = members.iter().any(|m| match kind {
            Zigzag => zvec(m) == want,
            Central => cvec(m) == want,
        });
        if !hit {
            bad.push(format!("panel n={n} p1={p1} {group} {kind:?}: want [{want}]"));
        }
    }
    // the n=7 z-tight panel
    let c2_7 = find_with(7, 2, "C2", Some((Zigzag, Tight)));
    if !c2_7.iter().any(|m| zvec(m) == "14_{0,1}, 14_{0,2}^2") {
        bad.push("panel n=7 p1=2 C2 z-tight: want [14_{0,1}, 14_{0,2}^2]".into());
    }
    report(
        8,
        "named circuit vectors",
        bad.is_empty(),
        &if bad.is_empty() {
            "figure vectors match (two captions corrected by their sum rules)".to_string()
        } else {
            bad.join("; ")
        },
    );
}

#[test]
fn criterion_09_tightness_bounds() {
    let r = verify::check_tight_bounds(&CENSUS);
    report(9, "tightness bounds", r.pass, &r.detail);
}

#[test]
fn criterion_10_weakly_tight_simple_classification() {
    let mut c_list = Vec::new();
    let mut z_list = Vec::new();
    for (&(n, _), ms) in &CENSUS.by_cell {
        for m in ms {
            for kind in [CircuitKind::Central, CircuitKind::Zigzag] {
                let t = circuits::tightness(m, kind).unwrap();
                if t.status == Tightness::Neither {
                    continue;
                }
                let set = match kind {
                    CircuitKind::Zigzag => circuits::zigzags(m).unwrap(),
                    CircuitKind::Central => circuits::central_circuits(m).unwrap(),
                };
                let all_simple = set
                    .vector()
                    .symbols
                    .iter()
                    .all(|(s, _)| s.alpha1 + s.alpha2 == 0);
                if all_simple {
                    match kind {
                        CircuitKind::Central => c_list.push(n),
                        CircuitKind::Zigzag => z_list.push(n),
                    }
                }
            }
        }
    }
    c_list.sort_unstable();
    z_list.sort_unstable();
    let pass = c_list == vec![2, 4, 8, 8, 12] && z_list == vec![2, 4, 6, 12, 14];
    report(
        10,
        "weakly tight with simple circuits",
        pass,
        &format!("c-graphs at n = {c_list:?} (want [2,4,8,8,12]); z-graphs at n = {z_list:?} (want [2,4,6,12,14])"),
    );
}

#[test]
fn criterion_11_oracle_equivalence() {
    let r = verify::check_oracle(&CENSUS, 6);
    report(11, "oracle equivalence", r.pass, &r.detail);
}

#[test]
fn criterion_12_minimal_representatives() {
    let want: BTreeMap<&str, usize> = [
        ("D6h", 2),
        ("D3h", 3),
        ("D2", 4),
        ("D2d", 4),
        ("Td", 4),
        ("C2", 5),
        ("D2h", 6),
        ("D3", 6),
        ("D3d", 6),
        ("C2v", 6),
        ("C3v", 7),
        ("C1", 8),
        ("S4", 8),
        ("Cs", 9),
        ("C3h", 9),
        ("C2h", 10),
        ("C3", 10),
        ("Th", 12),
    ]
    .into();
    let mut got: BTreeMap<&str, usize> = BTreeMap::new();
    for (&(n, p1), ms) in &CENSUS.by_cell {
        if p1 != 0 || n > 12 {
            continue;
        }
        for m in ms {
            let g = point_group(m).unwrap();
            got.entry(g.name).or_insert(n);
        }
    }
    let pass = got == want;
    report(
        12,
        "minimal representatives",
        pass,
        &if pass {
            "first occurrences in the p1=0 census match all 18 pinned minima".to_string()
        } else {
            format!("got {got:?}")
        },
    );
}

#[test]
fn criterion_13_gc_vector_transform() {
    let r = verify::check_gc_vector_transform();
    report(13, "GC vector-transformation statement", r.pass, &r.detail);
}

// supporting exactness check used by criterion 10's identification: the five
// z-graphs and five c-graphs really are the figure graphs
#[test]
fn criterion_10_support_identities() {
    let six = named::named_graph(NamedGraphId::SixK2).unwrap();
    let td = named::named_graph(NamedGraphId::K2Tetrahedron).unwrap();
    let th = &gc::tripling_pair(&td).unwrap()[0];
    let d6h8 = &gc::gc(&six, 2, 0).unwrap().members[0];
    let d6_14 = &gc::gc(&six, 2, 1).unwrap().members[0];
    let mut expected_codes: HashSet<Vec<u8>> = HashSet::new();
    for m in [&six, &td, th, d6h8, d6_14] {
        expected_codes.insert(m.canonical_code(true));
    }
    let mut found = 0;
    for (_, ms) in CENSUS.by_cell.iter() {
        for m in ms {
            if expected_codes.contains(&m.canonical_code(true)) {
                found += 1;
            }
        }
    }
    assert_eq!(found, 5, "all five constructed anchors occur in the census");
}
