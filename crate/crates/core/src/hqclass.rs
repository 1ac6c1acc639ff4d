//! Catalog of the classified maps with a verification and inequivalence
//! suite.

use std::fmt;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::automorphism::random_automorphism;
use crate::congruence::{is_simultaneously_diagonalizable, pairs_congruent, HermitianPair};
use crate::deg2::{classify_deg2_s3_to_q21, classify_deg2_sphere_map, Q21Class};
use crate::error::{Error, Result};
use crate::maps::{Hyperquadric, RationalMap};
use crate::parse::parse_poly;
use crate::poly::Poly;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub map: RationalMap,
    /// Entries sharing a class are the same map up to equivalence.
    pub class: &'static str,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn source(&self) -> Hyperquadric {
        self.map.source()
    }

    pub fn target(&self) -> Hyperquadric {
        self.map.target()
    }

    pub fn degree(&self) -> u32 {
        self.map.degree()
    }
}

struct Seed {
    id: &'static str,
    text: &'static str,
    class: &'static str,
    notes: &'static str,
}

macro_rules! data {
    ($name:literal) => {
        include_str!(concat!("../data/catalog/", $name, ".map"))
    };
}

const SEEDS: &[Seed] = &[
    Seed { id: "T1.1.i", text: data!("T1.1.i"), class: "S3-S5.i", notes: "linear embedding" },
    Seed { id: "T1.1.ii", text: data!("T1.1.ii"), class: "S3-S5.ii", notes: "Whitney map" },
    Seed { id: "T1.1.iii", text: data!("T1.1.iii"), class: "S3-S5.iii", notes: "group invariant" },
    Seed {
        id: "T1.1.iv",
        text: data!("T1.1.iv"),
        class: "S3-S5.iv",
        notes: "stored as printed; group invariant",
    },
    Seed { id: "T1.2.i", text: data!("T1.2.i"), class: "Q21.linear", notes: "linear embedding" },
    Seed { id: "T1.2.ii", text: data!("T1.2.ii"), class: "Q21.i", notes: "group invariant" },
    Seed { id: "T1.2.iii", text: data!("T1.2.iii"), class: "Q21.ii", notes: "" },
    Seed { id: "T1.2.iv", text: data!("T1.2.iv"), class: "Q21.iii", notes: "" },
    Seed { id: "T1.2.v", text: data!("T1.2.v"), class: "Q21.iv", notes: "" },
    Seed { id: "T1.2.vi", text: data!("T1.2.vi"), class: "Q21.cubic", notes: "degree three" },
    Seed { id: "L6.1.i", text: data!("T1.2.ii"), class: "Q21.i", notes: "monomial" },
    Seed { id: "L6.1.ii", text: data!("T1.2.iii"), class: "Q21.ii", notes: "monomial" },
    Seed { id: "L6.1.iii", text: data!("T1.2.iv"), class: "Q21.iii", notes: "pair not diagonalizable" },
    Seed { id: "L6.1.iv", text: data!("T1.2.v"), class: "Q21.iv", notes: "pair not diagonalizable" },
    Seed { id: "R4.2", text: data!("R4.2"), class: "disc", notes: "pair not diagonalizable" },
];

fn homogeneous(id: &'static str, comps: &[&str], class: &'static str) -> CatalogEntry {
    let polys = comps
        .iter()
        .map(|c| parse_poly(c, &["z", "w", "t"]).expect("catalog polynomial"))
        .collect();
    let map = RationalMap::homogeneous(Hyperquadric::sphere(2), Hyperquadric { a: 2, b: 1 }, polys)
        .expect("catalog map");
    CatalogEntry {
        id,
        map,
        class,
        notes: "homogeneous monomial map",
    }
}

/// `(1, g, g)` into `Q(2,1)` for a polynomial `g` in `z1, z2`.
pub fn instantiate_vii(g: &Poly) -> Result<RationalMap> {
    if g.nvars() != 2 {
        return Err(Error::DimensionMismatch("g must be a polynomial in z1, z2".into()));
    }
    RationalMap::affine(
        Hyperquadric::sphere(2),
        Hyperquadric::new(2, 1)?,
        vec![Poly::one(2), g.clone(), g.clone()],
        Poly::one(2),
    )
}

/// All entries; the parametric family (vii) is instantiated with `g = z1`.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = SEEDS
        .iter()
        .map(|s| CatalogEntry {
            id: s.id,
            map: RationalMap::parse(s.text).expect("catalog map parses"),
            class: s.class,
            notes: s.notes,
        })
        .collect();
    let g = Poly::var(2, 0);
    out.insert(
        10,
        CatalogEntry {
            id: "T1.2.vii",
            map: instantiate_vii(&g).expect("valid family member"),
            class: "Q21.vii",
            notes: "family (1, g, g) for any CR function g, shown with g = z1; excluded from equivalence checks",
        },
    );
    out.push(homogeneous("EQ.firsthqmonmap", &["z^2", "sqrt(2)*w*t", "w^2", "t^2"], "Q21.i"));
    out.push(homogeneous("EQ.secondhqmonmap", &["t*z", "w^2", "w*t", "z^2"], "Q21.ii"));
    out
}

pub fn lookup(id: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.check)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct CatalogReport {
    pub rows: Vec<CheckRow>,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    fn push(&mut self, check: String, passed: bool, detail: impl Into<String>) {
        self.rows.push(CheckRow {
            check,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        let failed = self.rows.iter().filter(|r| !r.passed).count();
        write!(f, "{} checks, {} failed", self.rows.len(), failed)
    }
}

fn pair_of(map: &RationalMap) -> Result<HermitianPair> {
    HermitianPair::new(map.source().homogeneous_matrix(), map.verify()?.into_matrix())
}

/// Scaling by negative constants is allowed when the target form is balanced.
fn negation_allowed(target: Hyperquadric) -> bool {
    target.a == target.b + 1
}

fn expected_q21(class: &str) -> Option<Q21Class> {
    match class {
        "Q21.i" => Some(Q21Class::MonomialI),
        "Q21.ii" => Some(Q21Class::MonomialIi),
        "Q21.iii" => Some(Q21Class::NonDiagIii),
        "Q21.iv" => Some(Q21Class::NonDiagIv),
        _ => None,
    }
}

fn expected_t(class: &str) -> Option<&'static str> {
    match class {
        "S3-S5.ii" => Some("t = (0, 1)"),
        "S3-S5.iii" => Some("t = (0, 0)"),
        _ => None,
    }
}

fn run_checks(entries: &[CatalogEntry], twists: usize, seed: u64) -> CatalogReport {
    let mut report = CatalogReport::default();
    let mut rng = StdRng::seed_from_u64(seed);
    for e in entries {
        let v = e.map.verify();
        let detail = match &v {
            Ok(_) => format!("{} -> {}, degree {}", e.source(), e.target(), e.degree()),
            Err(err) => err.to_string(),
        };
        report.push(format!("verify {}", e.id), v.is_ok(), detail);
    }
    let verified: Vec<&CatalogEntry> = entries.iter().filter(|e| e.map.verify().is_ok()).collect();
    for e in &verified {
        if let Some(want) = expected_q21(e.class) {
            let got = classify_deg2_s3_to_q21(&e.map);
            let ok = got.as_ref().is_ok_and(|c| *c == want);
            let detail = got.map_or_else(|err| err.to_string(), |c| c.to_string());
            report.push(format!("classify {} as {want}", e.id), ok, detail);
        }
        if let Some(want) = expected_t(e.class) {
            let got = classify_deg2_sphere_map(&e.map);
            let ok = got.as_ref().is_ok_and(|t| t.to_string() == want);
            let detail = got.map_or_else(|err| err.to_string(), |t| t.to_string());
            report.push(format!("classify {} as {want}", e.id), ok, detail);
        }
    }
    let deg2: Vec<&&CatalogEntry> = verified
        .iter()
        .filter(|e| e.degree() == 2 && e.class != "Q21.vii" && e.source().dim() >= 2)
        .collect();
    for (i, a) in deg2.iter().enumerate() {
        for b in &deg2[i + 1..] {
            if a.source() != b.source() || a.target() != b.target() {
                continue;
            }
            let same = a.class == b.class;
            let res = pair_of(&a.map)
                .and_then(|p| pair_of(&b.map).and_then(|q| pairs_congruent(&p, &q, negation_allowed(a.target()))));
            let ok = res.as_ref().is_ok_and(|&c| c == same);
            let detail = match res {
                Ok(c) => if c { "congruent" } else { "not congruent" }.to_string(),
                Err(err) => err.to_string(),
            };
            let rel = if same { "equivalent" } else { "inequivalent" };
            report.push(format!("{} vs {} {rel}", a.id, b.id), ok, detail);
        }
    }
    for e in &deg2 {
        let (pos, neg) = e.source().homogeneous_signature();
        let mut ok = true;
        let mut detail = format!("{twists} twists");
        for _ in 0..twists {
            let x = random_automorphism(pos, neg, 4, &mut rng);
            let res = e.map.precompose(&x).and_then(|g| {
                let p = pair_of(&e.map)?;
                let q = pair_of(&g)?;
                pairs_congruent(&p, &q, negation_allowed(e.target()))
            });
            match res {
                Ok(true) => {}
                Ok(false) => {
                    ok = false;
                    detail = "twisted pair not congruent".into();
                }
                Err(err) => {
                    ok = false;
                    detail = err.to_string();
                }
            }
        }
        report.push(format!("{} invariant under source automorphisms", e.id), ok, detail);
    }
    let comparable: Vec<&&CatalogEntry> = verified.iter().filter(|e| e.class != "Q21.vii").collect();
    for (i, a) in comparable.iter().enumerate() {
        for b in &comparable[i + 1..] {
            if a.source() == b.source() && a.target() == b.target() && a.degree() != b.degree() {
                report.push(
                    format!("{} vs {} inequivalent", a.id, b.id),
                    true,
                    format!("degrees {} and {}", a.degree(), b.degree()),
                );
            }
        }
    }
    for e in verified.iter().filter(|e| e.class == "disc") {
        let res = pair_of(&e.map).and_then(|p| is_simultaneously_diagonalizable(&p));
        let ok = res.as_ref().is_ok_and(|(d, _)| !d);
        let detail = match res {
            Ok((d, _)) => if d { "diagonalizable" } else { "not diagonalizable" }.to_string(),
            Err(err) => err.to_string(),
        };
        report.push(format!("{} pair not simultaneously diagonalizable", e.id), ok, detail);
    }
    report
}

/// Verify every entry and the equivalence structure of the catalog.
pub fn verify_catalog() -> CatalogReport {
    run_checks(&catalog(), 3, 1)
}

/// Checks restricted to one entry (plus comparisons involving it).
pub fn verify_entry(id: &str) -> Result<CatalogReport> {
    lookup(id)?;
    let mut report = verify_catalog();
    report.rows.retain(|r| r.check.split_whitespace().any(|w| w == id));
    Ok(report)
}

/// Like [`verify_catalog`] over a caller-supplied entry list.
pub fn verify_entries(entries: &[CatalogEntry]) -> CatalogReport {
    run_checks(entries, 3, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let e = lookup("T1.1.ii").unwrap();
        assert_eq!(e.source(), Hyperquadric::sphere(2));
        assert_eq!(e.target(), Hyperquadric::sphere(3));
        assert_eq!(lookup("L6.1.ii").unwrap().target(), Hyperquadric { a: 2, b: 1 });
        assert_eq!(lookup("R4.2").unwrap().source(), Hyperquadric::sphere(1));
        assert!(matches!(lookup("T9.9"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn perturbed_entry_fails() {
        let mut entries = catalog();
        let e = entries.iter_mut().find(|e| e.id == "T1.2.ii").unwrap();
        e.map = RationalMap::parse("map Q(2,0) -> Q(2,1)\nf1 = z1^2\nf2 = z2\nf3 = z2^2\n").unwrap();
        let report = verify_entries(&entries);
        let row = report.rows.iter().find(|r| r.check == "verify T1.2.ii").unwrap();
        assert!(!row.passed);
    }
}
