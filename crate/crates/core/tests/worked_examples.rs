use std::cmp::Ordering;

use degpoly_core::dp::{dp_sequence, PolySequence};
use degpoly_core::graph::{canonical_form, from_edge_list, SimpleGraph};
use degpoly_core::poly::{compare_pol, compare_pol_explained, Decision};
use degpoly_core::realize::{realize, RealizeOptions, Verdict};
use degpoly_core::DegreePoly;

fn p(s: &str) -> DegreePoly {
    s.parse().unwrap()
}

fn graph(text: &str) -> SimpleGraph {
    from_edge_list(text).unwrap().graph
}

/// Two triangles joined by a bridge.
fn bridged_triangles() -> SimpleGraph {
    graph("p q\nq r\nr p\nr s\ns t\nt u\nu s")
}

/// A hexagon with one long diagonal.
fn hexagon_with_diagonal() -> SimpleGraph {
    graph("a b\nb c\nc d\nd e\ne f\nf a\nb e")
}

#[test]
fn same_sequence_different_graphs() {
    let (g1, g2) = (bridged_triangles(), hexagon_with_diagonal());
    let q = dp_sequence(&g1).unwrap();
    assert_eq!(q, dp_sequence(&g2).unwrap());
    assert_eq!(q.to_string(), "x^3+2x^2, x^3+2x^2, x^3+x^2, x^3+x^2, x^3+x^2, x^3+x^2");
    assert_ne!(canonical_form(&g1).unwrap(), canonical_form(&g2).unwrap());

    let r = realize(&q, &RealizeOptions { want_all_witnesses: true, ..RealizeOptions::default() }).unwrap();
    assert_eq!(r.verdict, Verdict::Realizable);
    let forms: Vec<_> = r.witnesses.iter().map(|w| w.form.clone()).collect();
    assert_eq!(forms.len(), 2);
    assert!(forms.contains(&canonical_form(&g1).unwrap()));
    assert!(forms.contains(&canonical_form(&g2).unwrap()));
}

#[test]
fn same_degrees_different_sequences() {
    // degree sequence 3, 3, 2, 2, 2, 2 realized two ways
    let a = PolySequence::new(["2x^2+x^3", "2x^2+x^3", "x^2+x^3", "x^2+x^3", "x^2+x^3", "x^2+x^3"].map(p).to_vec());
    let listed = ["2x^2+x^3", "2x^2+x^3", "2x^3", "x^2+x^3", "x^2+x^3", "2x^2"].map(p).to_vec();
    let (b, reordered) = PolySequence::from_presented(listed).unwrap();
    let a = a.unwrap();
    assert_ne!(a, b);
    // 2x^2 outranks x^2+x^3 on their common exponent 2
    assert_eq!(compare_pol(&p("2x^2"), &p("x^2+x^3")).unwrap(), Ordering::Greater);
    assert!(reordered);
    assert_eq!(b.to_string(), "x^3+2x^2, x^3+2x^2, 2x^3, 2x^2, x^3+x^2, x^3+x^2");
    assert!(realize(&b, &RealizeOptions::default()).unwrap().nonisomorphic_count >= 1);
}

#[test]
fn small_graph_sequence() {
    let g = graph("a b\na c\nb c\nc d");
    assert_eq!(dp_sequence(&g).unwrap().to_string(), "2x^2+x, x^3+x^2, x^3+x^2, x^3");
}

#[test]
fn comparison_fixtures() {
    let cases = [
        ("2x^4+12x^3", "3x^5+x^2", Ordering::Greater),
        ("2x^4+12x^2", "2x^5+12x^2", Ordering::Less),
        ("2x^4+12x^2", "x^5+13x^2", Ordering::Less),
        ("2x^4+12x^2", "2x^4+11x^2+x", Ordering::Greater),
    ];
    for (f, g, want) in cases {
        assert_eq!(compare_pol(&p(f), &p(g)).unwrap(), want, "{f} vs {g}");
    }
    let e = compare_pol_explained(&p("2x^4+12x^2"), &p("2x^5+12x^2")).unwrap();
    assert_eq!(e.decision, Decision::Fallback { exponent: 5 });
}
