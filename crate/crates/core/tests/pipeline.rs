mod common;

use invar::acm::{acm_check, artinian_reduce, regularity_acm};
use invar::bounds::{corollary2_verdict, theorem1_verdict, Verdict};
use invar::corpus::{corpus, Params, FAMILIES};
use invar::project::project_field;
use invar::vfield::{invariance_check, min_invariant_degree};
use invar::Ideal;

use common::regularity_from_hilbert;

fn sample_params(family: &str) -> Params {
    match family {
        "jouanolou" => Params::new(4).with_p(2),
        "ccf" => Params::new(3).with_n(3),
        "fermat" => Params::new(3).with_n(2),
        "complete_intersection" => Params::new(2).with_degrees(&[2, 2]),
        _ => Params::new(3),
    }
}

#[test]
fn every_family_matches_its_expectations() {
    for family in FAMILIES {
        let c = corpus(family, &sample_params(family)).unwrap();
        let ex = &c.expected;
        let cert = invariance_check(&c.field, &c.ideal).unwrap();
        assert!(cert.verify(&c.field), "{family}");
        if let Some(inv) = ex.invariant {
            assert_eq!(cert.verdict, inv, "{family}");
        }
        if let Some(m) = ex.field_degree {
            assert_eq!(c.field.degree(), m, "{family}");
        }
        if let Some(e) = ex.degree {
            assert_eq!(c.ideal.degree(), e, "{family}");
        }
        if let Some(acm) = ex.acm {
            assert_eq!(acm_check(&c.ideal, 0).unwrap().verdict, acm, "{family}");
        }
        if let Some(r) = ex.regularity {
            assert_eq!(regularity_acm(&c.ideal, 0).unwrap(), r, "{family}");
            let sat = c.ideal.saturate_irrelevant().unwrap();
            let dim = (sat.projective_dimension() + 1) as u32;
            assert_eq!(regularity_from_hilbert(sat.ring(), sat.generators(), dim, 10), r, "{family} oracle");
        }
        if let (Some(q), Some(f)) = (ex.q, c.hypersurface()) {
            assert_eq!(min_invariant_degree(f).unwrap(), q, "{family}");
        }
    }
}

#[test]
fn unknown_family_is_rejected() {
    assert!(corpus("klein", &Params::new(3)).is_err());
}

#[test]
fn artinian_reduction_weights_sum_to_degree() {
    let c = corpus("complete_intersection", &Params::new(2).with_degrees(&[2, 3])).unwrap();
    let red = artinian_reduce(&c.ideal, 4).unwrap();
    assert_eq!(red.multiplicity, 6);
    assert_eq!(red.weights.iter().filter(|&&w| w == 0).count(), 1);
    assert_eq!(red.regularity, 4);
}

#[test]
fn projection_is_stable_across_seeds() {
    let c = corpus("twisted_cubic", &Params::new(3)).unwrap();
    for seed in [0, 11, 29] {
        let cert = project_field(&c.field, &c.ideal, &c.ideal, 0, seed).unwrap();
        assert_eq!(cert.projected_degree(), 2, "seed {seed}");
        assert!(cert.verify(), "seed {seed}");
        assert!(cert.checks.invariance && cert.checks.eliminant_generates);
    }
}

#[test]
fn complete_intersection_projects_to_plane() {
    let c = corpus("complete_intersection", &Params::new(2).with_degrees(&[2, 2])).unwrap();
    let cert = project_field(&c.field, &c.ideal, &c.ideal, 0, 3).unwrap();
    let (m, e, r) = (c.field.degree(), cert.projector.multiplicity() as u32, cert.projector.regularity());
    assert_eq!((e, r), (4, 3));
    assert_eq!(cert.projected_degree(), m + e - r);
    assert!(cert.verify());
    let plane: &Ideal = &cert.projected_ideal;
    assert_eq!(plane.degree(), 4);
}

#[test]
fn plane_curve_bounds() {
    let c = corpus("fermat", &Params::new(3).with_n(2)).unwrap();
    let rep = corollary2_verdict(&[3], &c.ideal, &c.field, 0).unwrap();
    assert_eq!((rep.lhs, rep.rhs), (Some(3), Some(4)));
    assert_eq!(rep.verdict, Verdict::Strict);
    let rep = theorem1_verdict(&c.ideal, &c.field, 0).unwrap();
    assert_eq!((rep.lhs, rep.rhs), (Some(3), Some(4)));
    assert!(rep.to_string().ends_with("verdict: holds (strict)"));
}
