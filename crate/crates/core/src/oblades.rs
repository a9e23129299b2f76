//! O-blade pictographs in left-fundamental coordinates `(a, b, c, d, e, f, g)`,
//! coupling enumeration, thresholds and the fork-exchanging involution Ψ.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::{alcove, Level, Weight};
use crate::error::{Error, Result};
use crate::multiplicity::{classical_multiplicity, thresholds, Triple};
use crate::report::Report;

/// The nine edge values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edges {
    pub l12: i64,
    pub l23: i64,
    pub l13: i64,
    pub m12: i64,
    pub m23: i64,
    pub m13: i64,
    pub n12: i64,
    pub n23: i64,
    pub n13: i64,
}

impl Edges {
    pub fn values(&self) -> [(&'static str, i64); 9] {
        [
            ("l12", self.l12),
            ("l23", self.l23),
            ("l13", self.l13),
            ("m12", self.m12),
            ("m23", self.m23),
            ("m13", self.m13),
            ("n12", self.n12),
            ("n23", self.n23),
            ("n13", self.n13),
        ]
    }

    pub fn all_non_negative(&self) -> bool {
        self.values().iter().all(|&(_, v)| v >= 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OBlade {
    pub coords: [i64; 7],
}

impl OBlade {
    /// A possibly virtual O-blade.
    pub const fn raw(coords: [i64; 7]) -> Self {
        OBlade { coords }
    }

    pub fn new(coords: [i64; 7]) -> Result<Self> {
        let o = OBlade { coords };
        match o.defect() {
            Some(reason) => Err(Error::InvalidOBlade { coords, reason }),
            None => Ok(o),
        }
    }

    fn defect(&self) -> Option<&'static str> {
        if self.coords[..6].iter().any(|&x| x < 0) {
            Some("negative non-primitive component")
        } else if !self.edges().all_non_negative() {
            Some("negative edge")
        } else {
            None
        }
    }

    pub fn is_valid(&self) -> bool {
        self.defect().is_none()
    }

    pub fn edges(&self) -> Edges {
        let [a, b, c, d, e, f, g] = self.coords;
        Edges {
            l12: d + g,
            l23: d,
            l13: c,
            m12: f + g,
            m23: f,
            m13: e,
            n12: b + g,
            n23: b,
            n13: a,
        }
    }

    /// `(λ1, λ2, μ1, μ2, ν1, ν2)` as signed integers.
    pub fn labels(&self) -> [i64; 6] {
        let [a, b, c, d, e, f, g] = self.coords;
        [b + e + g, a + f, a + d + g, b + c, d + e, c + f + g]
    }

    /// Level at which this coupling first appears.
    pub fn threshold(&self) -> i64 {
        let [a, b, c, d, e, f, g] = self.coords;
        (a + b + c + e + f + g)
            .max(a + c + d + e + f + g)
            .max(a + b + c + d + e + g)
    }

    /// The same threshold read from weights and edges.
    pub fn threshold_from_edges(&self) -> i64 {
        let [l1, l2, m1, m2, n1, n2] = self.labels();
        let e = self.edges();
        (l1 + l2 + e.l13).max(m1 + m2 + e.m13).max(n1 + n2 + e.n13)
    }
}

impl std::ops::Add for OBlade {
    type Output = OBlade;
    fn add(self, rhs: OBlade) -> OBlade {
        OBlade::raw(std::array::from_fn(|i| self.coords[i] + rhs.coords[i]))
    }
}

impl fmt::Display for OBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", c.join(","))
    }
}

/// Reads the branching; defined when the six labels are non-negative.
pub fn weights_of(o: &OBlade) -> Triple {
    let l = o
        .labels()
        .map(|x| u32::try_from(x).expect("label of a valid O-blade is non-negative"));
    Triple::new(
        Weight::new(l[0], l[1]),
        Weight::new(l[2], l[3]),
        Weight::new(l[4], l[5]),
    )
}

fn signed(t: Triple) -> [i64; 6] {
    [t.lam.l1, t.lam.l2, t.mu.l1, t.mu.l2, t.nu.l1, t.nu.l2].map(i64::from)
}

/// All couplings of `λ ⊗ μ → ν`, ordered by threshold.
pub fn enumerate_couplings(t: Triple) -> Vec<OBlade> {
    let [l1, l2, m1, m2, n1, n2] = signed(t);
    let (s1, s2) = (l1 + m1 + n2, l2 + m2 + n1);
    if (s1 - s2) % 3 != 0 {
        return Vec::new();
    }
    let g = (s1 - s2) / 3;
    let mut out: Vec<OBlade> = (0..=l2)
        .filter_map(|a| {
            let f = l2 - a;
            let d = m1 - g - a;
            let e = n1 - d;
            let b = l1 - e - g;
            let c = m2 - b;
            let o = OBlade::raw([a, b, c, d, e, f, g]);
            if o.coords[..6].iter().any(|&x| x < 0) {
                return None;
            }
            debug_assert_eq!(o.labels(), [l1, l2, m1, m2, n1, n2]);
            o.edges().all_non_negative().then_some(o)
        })
        .collect();
    out.sort_by_key(|o| (o.threshold(), o.coords));
    out
}

/// Couplings present at level `k`.
pub fn count_at_level(t: Triple, k: u32) -> usize {
    enumerate_couplings(t)
        .iter()
        .filter(|o| o.threshold() <= i64::from(k))
        .count()
}

/// The involution on branchings induced by exchanging the two forks.
pub fn psi_triple(t: Triple) -> Result<Triple> {
    let [l1, l2, m1, m2, n1, n2] = signed(t);
    let forms = [
        2 * l1 + l2 - m1 + m2 + n1 - n2,
        l1 + 2 * l2 + m1 - m2 - n1 + n2,
        -l1 + l2 + 2 * m1 + m2 + n1 - n2,
        l1 - l2 + m1 + 2 * m2 - n1 + n2,
        l1 - l2 + m1 - m2 + 2 * n1 + n2,
        -l1 + l2 - m1 + m2 + n1 + 2 * n2,
    ];
    if forms.iter().any(|&x| x < 0 || x % 3 != 0) {
        return Err(Error::PsiUndefined(t));
    }
    let v = forms.map(|x| (x / 3) as u32);
    Ok(Triple::new(
        Weight::new(v[0], v[1]),
        Weight::new(v[2], v[3]),
        Weight::new(v[4], v[5]),
    ))
}

pub fn psi_oblade(o: &OBlade) -> Result<OBlade> {
    let [a, b, c, d, e, f, g] = o.coords;
    OBlade::new([a, b + g, c, d + g, e, f + g, -g])
}

/// The eight fundamental O-blades.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FundamentalOBlade {
    /// `(0,1) ⊗ (1,0) ⊗ 1`.
    A,
    /// `(1,0) ⊗ (0,1) ⊗ 1`.
    B,
    /// `1 ⊗ (0,1) ⊗ (1,0)`.
    C,
    /// `1 ⊗ (1,0) ⊗ (0,1)`.
    D,
    /// `(1,0) ⊗ 1 ⊗ (0,1)`.
    E,
    /// `(0,1) ⊗ 1 ⊗ (1,0)`.
    F,
    /// Cube of `(1,0)`.
    LeftFork,
    /// Cube of `(0,1)`.
    RightFork,
}

impl FundamentalOBlade {
    pub const ALL: [FundamentalOBlade; 8] = [
        FundamentalOBlade::A,
        FundamentalOBlade::B,
        FundamentalOBlade::C,
        FundamentalOBlade::D,
        FundamentalOBlade::E,
        FundamentalOBlade::F,
        FundamentalOBlade::LeftFork,
        FundamentalOBlade::RightFork,
    ];

    /// The left basis: the six non-primitive blades and the left fork.
    pub const LEFT_BASIS: [FundamentalOBlade; 7] = [
        FundamentalOBlade::A,
        FundamentalOBlade::B,
        FundamentalOBlade::C,
        FundamentalOBlade::D,
        FundamentalOBlade::E,
        FundamentalOBlade::F,
        FundamentalOBlade::LeftFork,
    ];

    pub fn is_primitive(self) -> bool {
        matches!(
            self,
            FundamentalOBlade::LeftFork | FundamentalOBlade::RightFork
        )
    }

    pub fn oblade(self) -> OBlade {
        let mut c = [0; 7];
        match self {
            FundamentalOBlade::RightFork => c = [0, 1, 0, 1, 0, 1, -1],
            other => c[other as usize] = 1,
        }
        OBlade::raw(c)
    }

    /// The fundamental exchanged with this one by Ψ.
    pub fn psi(self) -> FundamentalOBlade {
        match self {
            FundamentalOBlade::LeftFork => FundamentalOBlade::RightFork,
            FundamentalOBlade::RightFork => FundamentalOBlade::LeftFork,
            other => other,
        }
    }
}

/// Expansion on the left basis.
pub fn decompose(o: &OBlade) -> Vec<(FundamentalOBlade, i64)> {
    FundamentalOBlade::LEFT_BASIS
        .iter()
        .zip(o.coords)
        .map(|(&b, c)| (b, c))
        .collect()
}

pub fn recompose(parts: &[(FundamentalOBlade, i64)]) -> OBlade {
    let mut c = [0; 7];
    for &(b, n) in parts {
        for (x, y) in c.iter_mut().zip(b.oblade().coords) {
            *x += n * y;
        }
    }
    OBlade::raw(c)
}

/// Checks on the eight fundamentals and the star relation.
pub fn fundamental_checks() -> Report {
    use FundamentalOBlade as F;
    let mut r = Report::new();
    let zero_one = F::ALL.iter().all(|b| {
        let o = b.oblade();
        o.is_valid() && o.edges().values().iter().all(|&(_, v)| v == 0 || v == 1)
    });
    r.expect("fundamentals valid with 0/1 edges", zero_one, || {
        "a fundamental blade has other edge values".into()
    });
    let thresholds_one = F::ALL.iter().all(|b| b.oblade().threshold() == 1);
    r.expect("fundamental thresholds", thresholds_one, || {
        "threshold differs from 1".into()
    });
    let lhs = F::LeftFork.oblade() + F::RightFork.oblade();
    let rhs = F::B.oblade() + F::D.oblade() + F::F.oblade();
    r.expect("left fork + right fork = B + D + F", lhs == rhs, || {
        format!("{lhs} vs {rhs}")
    });
    r.expect(
        "left fork weights",
        weights_of(&F::LeftFork.oblade()).to_string() == "((1,0),(1,0);(0,1))",
        || weights_of(&F::LeftFork.oblade()).to_string(),
    );
    let psi_ok = F::ALL
        .iter()
        .all(|&b| psi_oblade(&b.oblade()).ok() == Some(b.psi().oblade()));
    r.expect("Ψ exchanges the forks only", psi_ok, || {
        "Ψ moves a non-primitive blade".into()
    });
    r
}

/// Enumeration and Ψ checks over all triples with weight norms at most `n`.
pub fn scan_checks(n: u32) -> Report {
    let ws = alcove(Level::new(n)).weights().to_vec();
    let failures: Vec<(usize, String)> = ws
        .par_iter()
        .flat_map_iter(|&l| {
            let ws = &ws;
            ws.iter()
                .flat_map(move |&m| ws.iter().map(move |&nu| Triple::new(l, m, nu)))
        })
        .filter_map(triple_failure)
        .collect();
    let mut r = Report::new();
    for (i, name) in SCAN_CHECKS.iter().enumerate() {
        let first = failures.iter().find(|(j, _)| *j == i);
        r.expect(*name, first.is_none(), || first.unwrap().1.clone());
    }
    r
}

const SCAN_CHECKS: [&str; 6] = [
    "count = multiplicity",
    "thresholds = k0_min..k0_max",
    "g = (S1 − S2)/3",
    "edge form of threshold",
    "Ψ preserves thresholds",
    "Ψ on blades covers Ψ on triples",
];

fn triple_failure(t: Triple) -> Option<(usize, String)> {
    let blades = enumerate_couplings(t);
    let m = classical_multiplicity(t);
    if blades.len() != m as usize {
        return Some((0, format!("{t}: {} blades, multiplicity {m}", blades.len())));
    }
    if m == 0 {
        return None;
    }
    let p = thresholds(t).expect("positive multiplicity");
    let ks: Vec<i64> = blades.iter().map(OBlade::threshold).collect();
    if !ks.iter().copied().eq((p.k0_min..=p.k0_max).map(i64::from)) {
        return Some((1, format!("{t}: thresholds {ks:?}")));
    }
    let [l1, l2, m1, m2, n1, n2] = signed(t);
    if blades
        .iter()
        .any(|o| 3 * o.coords[6] != (l1 + m1 + n2) - (l2 + m2 + n1))
    {
        return Some((2, t.to_string()));
    }
    if blades
        .iter()
        .any(|o| o.threshold() != o.threshold_from_edges())
    {
        return Some((3, t.to_string()));
    }
    let images: Vec<OBlade> = match blades.iter().map(psi_oblade).collect::<Result<_>>() {
        Ok(v) => v,
        Err(e) => return Some((4, format!("{t}: {e}"))),
    };
    if images
        .iter()
        .zip(&blades)
        .any(|(a, b)| a.threshold() != b.threshold())
    {
        return Some((4, t.to_string()));
    }
    let target = match psi_triple(t) {
        Ok(x) => x,
        Err(e) => return Some((5, e.to_string())),
    };
    let mut images = images;
    images.sort_by_key(|o| (o.threshold(), o.coords));
    if images.iter().any(|o| weights_of(o) != target) || images != enumerate_couplings(target) {
        return Some((5, format!("{t} → {target}")));
    }
    None
}

/// Multi-line text block: coordinates, edges and threshold.
pub fn render_text(o: &OBlade) -> String {
    let e: Vec<String> = o
        .edges()
        .values()
        .iter()
        .map(|(n, v)| format!("{n}={v}"))
        .collect();
    format!(
        "(a,b,c,d,e,f,g) = {}\nweights {}\nedges {}\nthreshold {}",
        o,
        weights_of(o),
        e.join(" "),
        o.threshold()
    )
}

/// A line drawing: a triangle of external sides, the inner vertex, and three
/// labelled edges from each corner to it.
pub fn render_svg(o: &OBlade) -> String {
    let t = weights_of(o);
    let e = o.edges();
    let (cx, cy) = (200.0_f64, 210.0_f64);
    let corners = [
        ("λ", t.lam, (200.0, 40.0)),
        ("μ", t.mu, (40.0, 330.0)),
        ("ν", t.nu, (360.0, 330.0)),
    ];
    let fans = [
        [("l12", e.l12), ("l23", e.l23), ("l13", e.l13)],
        [("m12", e.m12), ("m23", e.m23), ("m13", e.m13)],
        [("n12", e.n12), ("n23", e.n23), ("n13", e.n13)],
    ];
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<title>{} threshold {}</title>"#, o, o.threshold());
    for i in 0..3 {
        let (x1, y1) = corners[i].2;
        let (x2, y2) = corners[(i + 1) % 3].2;
        let _ = writeln!(
            s,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>"#
        );
    }
    for (i, (name, w, (x, y))) in corners.iter().enumerate() {
        let dy = if i == 0 { -12.0 } else { 22.0 };
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{}" text-anchor="middle">{name}={w}</text>"#,
            y + dy
        );
        for (j, (label, v)) in fans[i].iter().enumerate() {
            let off = (j as f64 - 1.0) * 14.0;
            let (nx, ny) = normal(*x, *y, cx, cy);
            let (x1, y1) = (x + nx * off, y + ny * off);
            let (x2, y2) = (cx + nx * off * 0.3, cy + ny * off * 0.3);
            let dash = if *v == 0 {
                r#" stroke-dasharray="4 3""#
            } else {
                ""
            };
            let width = 1.0 + (*v).clamp(0, 6) as f64 * 0.5;
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="steelblue" stroke-width="{width}"{dash}/>"#
            );
            let (tx, ty) = ((x1 + x2) / 2.0 + nx * 8.0, (y1 + y2) / 2.0 + ny * 8.0);
            let _ = writeln!(
                s,
                r#"<text x="{tx:.1}" y="{ty:.1}" font-size="10">{label}={v}</text>"#
            );
        }
    }
    let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="200" y="390" text-anchor="middle">k0 = {}</text>"#,
        o.threshold()
    );
    s.push_str("</svg>\n");
    s
}

fn normal(x: f64, y: f64, cx: f64, cy: f64) -> (f64, f64) {
    let (dx, dy) = (cx - x, cy - y);
    let len = dx.hypot(dy);
    (-dy / len, dx / len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Triple {
        s.parse().unwrap()
    }

    #[test]
    fn weights_examples() {
        assert_eq!(
            weights_of(&OBlade::raw([0, 0, 0, 0, 0, 0, 1])),
            t("1,0/1,0/0,1")
        );
        assert_eq!(
            weights_of(&OBlade::raw([0, 1, 0, 1, 0, 1, -1])),
            t("0,1/0,1/1,0")
        );
        assert_eq!(weights_of(&OBlade::raw([0; 7])), t("0,0/0,0/0,0"));
        assert_eq!(OBlade::raw([0, 0, 0, 0, 0, 0, 1]).threshold(), 1);
        assert_eq!(OBlade::raw([0; 7]).threshold(), 0);
    }

    #[test]
    fn nine_five_six_two_to_eight_six() {
        let blades = enumerate_couplings(t("9,5/6,2/8,6"));
        assert_eq!(blades.len(), 3);
        assert_eq!(
            blades.iter().map(OBlade::threshold).collect::<Vec<_>>(),
            vec![15, 16, 17]
        );
        for o in &blades {
            assert_eq!(weights_of(o), t("9,5/6,2/8,6"));
            assert!(o.is_valid());
        }
        assert_eq!(count_at_level(t("9,5/6,2/8,6"), 15), 1);
        assert_eq!(count_at_level(t("9,5/6,2/8,6"), 14), 0);
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(
            enumerate_couplings(t("1,0/1,0/0,1")),
            vec![FundamentalOBlade::LeftFork.oblade()]
        );
        assert!(enumerate_couplings(t("1,0/1,0/1,1")).is_empty());
    }

    #[test]
    fn psi_examples() {
        let a = t("9,5/6,2/10,5");
        let b = psi_triple(a).unwrap();
        assert_eq!(b, t("8,6/5,3/11,4"));
        assert_eq!(psi_triple(b).unwrap(), a);
        assert_eq!(classical_multiplicity(a), 3);
        assert_eq!(classical_multiplicity(b), 3);
        assert_eq!(thresholds(a).unwrap().k0_min, 16);
        assert_eq!(thresholds(b).unwrap().k0_min, 16);
        let mut images: Vec<OBlade> = enumerate_couplings(a)
            .iter()
            .map(|o| psi_oblade(o).unwrap())
            .collect();
        images.sort_by_key(|o| (o.threshold(), o.coords));
        assert_eq!(images, enumerate_couplings(b));
        assert_eq!(psi_triple(t("1,0/1,0/0,1")).unwrap(), t("0,1/0,1/1,0"));
        assert!(matches!(
            psi_triple(t("1,0/0,0/0,0")),
            Err(Error::PsiUndefined(_))
        ));
    }

    #[test]
    fn psi_on_blades() {
        let left = FundamentalOBlade::LeftFork.oblade();
        assert_eq!(
            psi_oblade(&left).unwrap(),
            OBlade::raw([0, 1, 0, 1, 0, 1, -1])
        );
        let fixed = OBlade::raw([2, 1, 0, 3, 1, 4, 0]);
        assert_eq!(psi_oblade(&fixed).unwrap(), fixed);
        assert!(psi_oblade(&OBlade::raw([0, 0, 0, 0, 0, 0, -1])).is_err());
    }

    #[test]
    fn fundamentals() {
        let r = fundamental_checks();
        assert!(r.passed(), "{r}");
        let o = OBlade::raw([3, 1, 4, 1, 5, 9, -1]);
        assert_eq!(recompose(&decompose(&o)), o);
    }

    #[test]
    fn validity() {
        assert!(OBlade::new([0, 0, 0, 0, 0, 0, -1]).is_err());
        assert!(OBlade::new([-1, 0, 0, 0, 0, 0, 0]).is_err());
        assert!(OBlade::new([0, 1, 0, 1, 0, 1, -1]).is_ok());
    }

    #[test]
    fn exhaustive_scan() {
        let r = scan_checks(8);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn rendering() {
        let o = enumerate_couplings(t("9,5/6,2/8,6"))[0];
        let text = render_text(&o);
        assert!(text.contains("threshold 15"));
        assert!(text.contains("weights ((9,5),(6,2);(8,6))"));
        let svg = render_svg(&o);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line").count(), 12);
    }
}
