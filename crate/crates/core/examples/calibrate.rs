//! Scratch calibration runs; not part of the library surface.
use num_complex::Complex;
use thullen::domain::{random_interior_points, DomainParam, Point};
use thullen::maps::{f_alpha, transport_v};
use thullen::quadrature::{build_rule_oriented, Levels, Orientation, RadialSpec};
use std::time::Instant;

fn main() {
    let p: DomainParam<f64> = DomainParam::new(2.0).unwrap();
    let poly = |z: &Point<f64>| {
        Complex::new(0.7, 0.0) + z.z1 * Complex::new(0.5, 0.25) + z.z2 * z.z2 * z.z1
    };
    for (r1, a1, r2, a2) in [(64usize, 128usize, 6usize, 8usize), (96, 192, 6, 8), (96, 224, 8, 8)] {
        let levels = Levels {
            radial1: RadialSpec::gauss(r1), angular1: a1,
            radial2: RadialSpec::gauss(r2), angular2: a2,
        };
        let rule = build_rule_oriented(&p, levels, Orientation::Reversed).unwrap();
        // sanity: volume
        let volerr: f64 = (rule.total_weight() - p.volume()).abs() / p.volume();
        let nf = rule.norm(poly).unwrap();
        let start = Instant::now();
        let mut worst_v = 0.0f64;
        for z in random_interior_points(&p, 0.6, 50, 59) {
            let v = transport_v(f_alpha(&z, &p), &p, poly).unwrap().into_fn();
            worst_v = worst_v.max((rule.norm(v).unwrap() - nf).abs() / nf);
        }
        println!("rev r{r1} a{a1}|r{r2} a{a2}: nodes={:>8} volerr {volerr:.1e} V worst {worst_v:.1e} ({:?})", rule.len(), start.elapsed());
    }
}
