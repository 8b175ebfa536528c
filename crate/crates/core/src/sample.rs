//! Sampling the surface `π ∘ f₀` in S⁶ on two polar charts.
//!
//! Chart 0 uses `z = r e^{iθ}`, chart 1 uses `z = e^{iθ}/r`, with
//! `r = (i + ½)/n` and `θ = 2πj/n`, so the charts are disjoint and every
//! sample appears once.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::io::fmt_f64;
use crate::twistor::{project_curve_point, CurveC7};

#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub chart: u8,
    /// Chart coordinate.
    pub t: Complex64,
    pub x: [f64; 7],
}

/// `2n²` samples, chart by chart, ring by ring.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub n: usize,
    pub points: Vec<SamplePoint>,
}

pub fn sample_surface<S: Scalar>(f0: &CurveC7<S>, n: usize) -> Result<SampleSet> {
    if n < 8 {
        return Err(Error::InvalidArgument(format!("need n >= 8, got {n}")));
    }
    let far = crate::plucker::curve_at_infinity(f0);
    let grid: Vec<(u8, usize, usize)> =
        (0..2u8).flat_map(|c| (0..n).flat_map(move |i| (0..n).map(move |j| (c, i, j)))).collect();
    let points = grid
        .par_iter()
        .map(|&(chart, i, j)| {
            let r = (i as f64 + 0.5) / n as f64;
            let theta = TAU * j as f64 / n as f64;
            // chart 1: w = r e^{−iθ}, so z = 1/w = e^{iθ}/r
            let (t, curve) = match chart {
                0 => (Complex64::from_polar(r, theta), f0),
                _ => (Complex64::from_polar(r, -theta), &far),
            };
            let v = project_curve_point(curve, t)?;
            Ok(SamplePoint { chart, t, x: v.re() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SampleSet { n, points })
}

impl SampleSet {
    fn index(&self, chart: usize, i: usize, j: usize) -> usize {
        chart * self.n * self.n + i * self.n + (j % self.n)
    }

    pub fn max_norm_deviation(&self) -> f64 {
        self.points
            .iter()
            .map(|p| (p.x.iter().map(|c| c * c).sum::<f64>().sqrt() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        let mut s = format!("{{\n  \"n\": {},\n  \"charts\": 2,\n  \"points\": [\n", self.n);
        for (k, p) in self.points.iter().enumerate() {
            let x: Vec<String> = p.x.iter().map(|v| fmt_f64(*v)).collect();
            let _ = write!(
                s,
                "    {{\"chart\": {}, \"t\": [{}, {}], \"x\": [{}]}}",
                p.chart,
                fmt_f64(p.t.re),
                fmt_f64(p.t.im),
                x.join(", ")
            );
            s.push_str(if k + 1 < self.points.len() { ",\n" } else { "\n" });
        }
        s.push_str("  ]\n}\n");
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("chart,t_re,t_im,x1,x2,x3,x4,x5,x6,x7\n");
        for p in &self.points {
            let x: Vec<String> = p.x.iter().map(|v| fmt_f64(*v)).collect();
            let _ = writeln!(s, "{},{},{},{}", p.chart, fmt_f64(p.t.re), fmt_f64(p.t.im), x.join(","));
        }
        s
    }

    /// Closed mesh projected orthogonally onto the coordinate axes `axes`:
    /// quads between neighbouring rings, quads joining the two outer rings,
    /// and an `n`-gon cap at each chart centre.
    pub fn to_obj(&self, axes: [usize; 3]) -> String {
        let n = self.n;
        let mut s = format!("# {} vertices\n", self.points.len());
        for p in &self.points {
            let _ = writeln!(s, "v {} {} {}", fmt_f64(p.x[axes[0]]), fmt_f64(p.x[axes[1]]), fmt_f64(p.x[axes[2]]));
        }
        // OBJ indices are 1-based
        let v = |c: usize, i: usize, j: usize| self.index(c, i, j) + 1;
        for c in 0..2 {
            for i in 0..n - 1 {
                for j in 0..n {
                    let _ = writeln!(s, "f {} {} {} {}", v(c, i, j), v(c, i + 1, j), v(c, i + 1, j + 1), v(c, i, j + 1));
                }
            }
            let cap: Vec<String> = (0..n).map(|j| v(c, 0, j).to_string()).collect();
            let _ = writeln!(s, "f {}", cap.join(" "));
        }
        for j in 0..n {
            let _ = writeln!(s, "f {} {} {} {}", v(0, n - 1, j), v(1, n - 1, j), v(1, n - 1, j + 1), v(0, n - 1, j + 1));
        }
        s
    }

    pub fn face_count(&self) -> usize {
        2 * ((self.n - 1) * self.n + 1) + self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example_family;

    #[test]
    fn unit_samples() {
        let f = example_family(1, 1).unwrap();
        let s = sample_surface(&f, 8).unwrap();
        assert_eq!(s.points.len(), 128);
        assert!(s.max_norm_deviation() < 1e-10);
    }

    #[test]
    fn obj_counts() {
        let f = example_family(1, 1).unwrap();
        let s = sample_surface(&f, 8).unwrap();
        let obj = s.to_obj([0, 1, 2]);
        let verts = obj.lines().filter(|l| l.starts_with("v ")).count();
        let faces: Vec<&str> = obj.lines().filter(|l| l.starts_with("f ")).collect();
        assert_eq!(verts, 128);
        assert_eq!(faces.len(), s.face_count());
        // a closed sphere: V − E + F = 2
        let edges: usize = faces.iter().map(|f| f.split_whitespace().count() - 1).sum::<usize>() / 2;
        assert_eq!(verts as i64 - edges as i64 + faces.len() as i64, 2);
        for f in faces {
            assert!(f.split_whitespace().skip(1).all(|i| (1..=verts).contains(&i.parse().unwrap())));
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(sample_surface(&example_family(1, 1).unwrap(), 7).is_err());
    }
}
