//! Saddle counts from barcodes and fiber homotopy-type reports for Morse
//! functions on compact connected surfaces, plus the one-dimensional
//! (interval / circle) reports.

use crate::error::{Error, Result};
use crate::fiber_circle;
use crate::fiber_interval;
use crate::num::Rat;
use crate::persistence::Barcode;
use crate::pl::DomainKind;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// Whether a boundary circle is a local minimum or maximum of the functions
/// in the fiber component under consideration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryTag {
    Min,
    Max,
}

/// A compact connected surface: orientability, genus (non-orientable genus
/// for non-orientable surfaces), and tagged boundary circles. `beta2` must
/// be supplied for closed non-orientable surfaces, where it depends on the
/// coefficient field of the barcode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: Vec<BoundaryTag>,
    pub beta2: Option<u32>,
}

impl SurfaceSpec {
    pub fn sphere() -> Self {
        SurfaceSpec { orientable: true, genus: 0, boundary: vec![], beta2: None }
    }

    pub fn torus() -> Self {
        SurfaceSpec { orientable: true, genus: 1, boundary: vec![], beta2: None }
    }

    pub fn projective_plane(beta2: u32) -> Self {
        SurfaceSpec { orientable: false, genus: 1, boundary: vec![], beta2: Some(beta2) }
    }

    pub fn klein_bottle(beta2: u32) -> Self {
        SurfaceSpec { orientable: false, genus: 2, boundary: vec![], beta2: Some(beta2) }
    }

    pub fn disk(tag: BoundaryTag) -> Self {
        SurfaceSpec { orientable: true, genus: 0, boundary: vec![tag], beta2: None }
    }

    pub fn annulus(tags: [BoundaryTag; 2]) -> Self {
        SurfaceSpec { orientable: true, genus: 0, boundary: tags.to_vec(), beta2: None }
    }

    pub fn mobius_strip(tag: BoundaryTag) -> Self {
        SurfaceSpec { orientable: false, genus: 1, boundary: vec![tag], beta2: None }
    }

    /// Resolves a shortcut name; boundary circles default to `max` tags.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().replace(['-', '_'], " ").as_str() {
            "sphere" | "s2" => Ok(SurfaceSpec::sphere()),
            "torus" => Ok(SurfaceSpec::torus()),
            "projective plane" | "rp2" => Ok(SurfaceSpec::projective_plane(0)),
            "klein bottle" => Ok(SurfaceSpec::klein_bottle(0)),
            "disk" | "d2" => Ok(SurfaceSpec::disk(BoundaryTag::Max)),
            "annulus" => Ok(SurfaceSpec::annulus([BoundaryTag::Max, BoundaryTag::Max])),
            "mobius strip" | "mobius" => Ok(SurfaceSpec::mobius_strip(BoundaryTag::Max)),
            other => Err(Error::InconsistentSurface(format!("unknown surface name `{other}`"))),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let b = self.boundary.len() as i64;
        if self.orientable {
            2 - 2 * self.genus as i64 - b
        } else {
            2 - self.genus as i64 - b
        }
    }

    pub fn beta0(&self) -> u32 {
        1 // connected by assumption
    }

    pub fn beta2(&self) -> Result<u32> {
        let check = |expected: u32| match self.beta2 {
            Some(v) if v != expected => Err(Error::InconsistentSurface(format!(
                "beta2 = {v} contradicts the derived value {expected}"
            ))),
            _ => Ok(expected),
        };
        if !self.boundary.is_empty() {
            check(0)
        } else if self.orientable {
            check(1)
        } else {
            match self.beta2 {
                Some(v @ (0 | 1)) => Ok(v),
                Some(v) => Err(Error::InconsistentSurface(format!("beta2 = {v} is not 0 or 1"))),
                None => Err(Error::InconsistentSurface(
                    "closed non-orientable surfaces need an explicit field-dependent beta2".into(),
                )),
            }
        }
    }

    pub fn boundary_min_count(&self) -> usize {
        self.boundary.iter().filter(|t| **t == BoundaryTag::Min).count()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    fn is_sphere(&self) -> bool {
        self.orientable && self.genus == 0 && self.is_closed()
    }

    fn is_torus(&self) -> bool {
        self.orientable && self.genus == 1 && self.is_closed()
    }

    fn is_projective_plane(&self) -> bool {
        !self.orientable && self.genus == 1 && self.is_closed()
    }

    fn is_klein_bottle(&self) -> bool {
        !self.orientable && self.genus == 2 && self.is_closed()
    }

    fn is_disk(&self) -> bool {
        self.orientable && self.genus == 0 && self.boundary.len() == 1
    }

    fn is_annulus(&self) -> bool {
        self.orientable && self.genus == 0 && self.boundary.len() == 2
    }

    fn is_mobius_strip(&self) -> bool {
        !self.orientable && self.genus == 1 && self.boundary.len() == 1
    }

    /// Obtained from one of the classified surfaces (sphere, projective
    /// plane, torus, annulus, disk) by removing at least one further disk,
    /// excluding the surfaces with their own clause.
    fn is_removed_disk_case(&self) -> bool {
        let b = self.boundary.len();
        (self.orientable && self.genus == 0 && b >= 3)
            || (self.orientable && self.genus == 1 && b >= 1)
            || (!self.orientable && self.genus == 1 && b >= 2)
    }

    /// Compact surfaces are aspherical except the sphere and the
    /// projective plane.
    fn is_aspherical(&self) -> bool {
        !(self.is_sphere() || self.is_projective_plane())
    }
}

/// Symbolic homotopy type of a fiber component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyType {
    Point,
    Sphere2,
    /// `(S^1)^k` with `k >= 1`.
    Torus(u32),
    /// `SO(3) x (S^1)^k` with `k >= 0`.
    So3CrossTorus(u32),
    /// `(S^1)^{k_f}` with `k_f` unknown but bounded above.
    TorusUnknownPower { bound: i64 },
}

impl HomotopyType {
    fn torus_power(k: i64) -> Self {
        debug_assert!(k >= 0);
        if k == 0 {
            HomotopyType::Point
        } else {
            HomotopyType::Torus(k as u32)
        }
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyType::Point => write!(f, "point"),
            HomotopyType::Sphere2 => write!(f, "S^2"),
            HomotopyType::Torus(1) => write!(f, "S^1"),
            HomotopyType::Torus(k) => write!(f, "(S^1)^{k}"),
            HomotopyType::So3CrossTorus(0) => write!(f, "SO(3)"),
            HomotopyType::So3CrossTorus(1) => write!(f, "SO(3) x S^1"),
            HomotopyType::So3CrossTorus(k) => write!(f, "SO(3) x (S^1)^{k}"),
            HomotopyType::TorusUnknownPower { bound } => write!(f, "(S^1)^{{k_f}}, k_f <= {bound}"),
        }
    }
}

impl FromStr for HomotopyType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_power = |p: &str| -> Result<u32> {
            p.parse().map_err(|_| Error::Parse(format!("bad circle power `{p}`")))
        };
        if s == "point" {
            Ok(HomotopyType::Point)
        } else if s == "S^2" {
            Ok(HomotopyType::Sphere2)
        } else if s == "S^1" {
            Ok(HomotopyType::Torus(1))
        } else if s == "SO(3)" {
            Ok(HomotopyType::So3CrossTorus(0))
        } else if s == "SO(3) x S^1" {
            Ok(HomotopyType::So3CrossTorus(1))
        } else if let Some(rest) = s.strip_prefix("SO(3) x (S^1)^") {
            Ok(HomotopyType::So3CrossTorus(parse_power(rest)?))
        } else if let Some(rest) = s.strip_prefix("(S^1)^{k_f}, k_f <= ") {
            let bound = rest.parse().map_err(|_| Error::Parse(format!("bad bound `{rest}`")))?;
            Ok(HomotopyType::TorusUnknownPower { bound })
        } else if let Some(rest) = s.strip_prefix("(S^1)^") {
            Ok(HomotopyType::Torus(parse_power(rest)?))
        } else {
            Err(Error::Parse(format!("unrecognized homotopy type `{s}`")))
        }
    }
}

/// A homotopy group reported symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicGroup {
    Trivial,
    Integers,
    /// `pi_n(S^2)` for `n >= 4`, left unevaluated.
    PiSphere2(u32),
}

impl fmt::Display for SymbolicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicGroup::Trivial => write!(f, "0"),
            SymbolicGroup::Integers => write!(f, "Z"),
            SymbolicGroup::PiSphere2(n) => write!(f, "pi_{n}(S^2)"),
        }
    }
}

impl FromStr for SymbolicGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "0" => Ok(SymbolicGroup::Trivial),
            "Z" => Ok(SymbolicGroup::Integers),
            _ => {
                let n = s
                    .strip_prefix("pi_")
                    .and_then(|r| r.strip_suffix("(S^2)"))
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unrecognized group `{s}`")))?;
                Ok(SymbolicGroup::PiSphere2(n))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Assumptions {
    pub distinct_endpoints: bool,
    pub c1_positive: bool,
}

/// The computed report for one fiber component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub c1: u32,
    pub homotopy_type: HomotopyType,
    pub pi_n: BTreeMap<u32, SymbolicGroup>,
    pub assumptions: Assumptions,
    /// Number of fiber components over the barcode; only attached by the
    /// one-dimensional reports.
    pub component_count: Option<usize>,
}

/// Number of index-1 critical points inferred from the barcode:
/// `I_D - beta_0 - beta_2 - #(boundary minima)`.
pub fn saddle_count(d: &Barcode, surface: &SurfaceSpec) -> Result<u32> {
    let beta0 = surface.beta0() as usize;
    let beta2 = surface.beta2()? as usize;
    let cannot = |msg: String| Err(Error::NegativeCount(msg));
    if d.infinite_in_degree(0).count() != beta0 {
        return cannot(format!(
            "expected {beta0} infinite degree-0 bar(s) for a connected surface, found {}",
            d.infinite_in_degree(0).count()
        ));
    }
    if d.infinite_in_degree(2).count() != beta2 {
        return cannot(format!(
            "expected {beta2} infinite degree-2 bar(s), found {}",
            d.infinite_in_degree(2).count()
        ));
    }
    let c1 = d.len() as i64 - beta0 as i64 - beta2 as i64 - surface.boundary_min_count() as i64;
    if c1 < 0 {
        return cannot(format!("interval count gives c1 = {c1}"));
    }
    Ok(c1 as u32)
}

/// All bounded-bar endpoints across all degrees, pairwise distinct?
pub fn bounded_endpoints_distinct(d: &Barcode) -> bool {
    let mut seen: BTreeSet<&Rat> = BTreeSet::new();
    let mut count = 0usize;
    for bar in d.bars() {
        if let Some(death) = &bar.death {
            count += 2;
            seen.insert(&bar.birth);
            seen.insert(death);
        }
    }
    seen.len() == count
}

/// Classification of the fiber component's homotopy type by surface and
/// saddle count. For `c1 > 0` the classification assumes pairwise distinct
/// bounded endpoints; when that fails the report is still produced but the
/// `distinct_endpoints` assumption flag is cleared.
pub fn fiber_homotopy_type(d: &Barcode, surface: &SurfaceSpec) -> Result<FiberReport> {
    let c1 = saddle_count(d, surface)?;
    let assumptions = Assumptions {
        distinct_endpoints: bounded_endpoints_distinct(d),
        c1_positive: c1 > 0,
    };
    let chi = surface.euler_characteristic();
    let homotopy_type = if c1 == 0 {
        if surface.is_sphere() {
            HomotopyType::Sphere2
        } else if surface.is_annulus() || surface.is_disk() {
            HomotopyType::Point
        } else {
            return Err(Error::NotClassified(format!(
                "no saddle-free classification for this surface (chi = {chi})"
            )));
        }
    } else if surface.is_sphere() || surface.is_projective_plane() {
        HomotopyType::So3CrossTorus(c1 - 1)
    } else if surface.is_torus() {
        HomotopyType::Torus(c1 + 1)
    } else if surface.is_annulus() || surface.is_disk() || surface.is_mobius_strip() {
        HomotopyType::Torus(c1)
    } else if surface.is_klein_bottle() {
        HomotopyType::TorusUnknownPower { bound: c1 as i64 + 1 }
    } else if surface.is_removed_disk_case() {
        HomotopyType::torus_power(c1 as i64 - 1)
    } else if surface.orientable {
        let power = c1 as i64 + chi;
        if power < 0 {
            return Err(Error::NotClassified(format!(
                "c1 + chi = {power} is negative; no Morse function fits"
            )));
        }
        HomotopyType::torus_power(power)
    } else {
        HomotopyType::TorusUnknownPower { bound: c1 as i64 + chi }
    };

    let mut pi_n = BTreeMap::new();
    if c1 > 0 {
        pi_n.insert(2, SymbolicGroup::Trivial);
        pi_n.insert(3, homotopy_groups(surface, c1, 3)?);
    }
    Ok(FiberReport { c1, homotopy_type, pi_n, assumptions, component_count: None })
}

/// `pi_n` of the fiber component for `n >= 2` and `c1 > 0`: trivial in
/// degree 2, and `pi_n` of the surface itself above that.
pub fn homotopy_groups(surface: &SurfaceSpec, c1: u32, n: u32) -> Result<SymbolicGroup> {
    if c1 == 0 {
        return Err(Error::RequiresPositiveSaddles);
    }
    if n < 2 {
        return Err(Error::NotClassified("homotopy groups are reported for n >= 2 only".into()));
    }
    if n == 2 || surface.is_aspherical() {
        return Ok(SymbolicGroup::Trivial);
    }
    // Sphere or projective plane: pi_n(M) = pi_n(S^2) via the universal cover.
    Ok(if n == 3 { SymbolicGroup::Integers } else { SymbolicGroup::PiSphere2(n) })
}

/// Fiber report for the one-dimensional domains: every circle component is
/// homotopy equivalent to a circle (the constant component to a point) and
/// every interval component is contractible. The component count comes from
/// the corresponding enumeration.
pub fn circle_interval_report(
    domain: DomainKind,
    d: &Barcode,
    allow_repeated_endpoints: bool,
) -> Result<FiberReport> {
    let assumptions = Assumptions {
        distinct_endpoints: bounded_endpoints_distinct(d),
        c1_positive: false,
    };
    let (homotopy_type, count) = match domain {
        DomainKind::Circle => {
            let opts = fiber_circle::EnumerateOptions { allow_repeated_endpoints, ..Default::default() };
            let comps = fiber_circle::enumerate_components(d, &opts)?;
            let ty = if d.is_trivial_circle() { HomotopyType::Point } else { HomotopyType::Torus(1) };
            (ty, comps.len())
        }
        DomainKind::Interval => {
            let opts = fiber_interval::EnumerateOptions { allow_repeated_endpoints, ..Default::default() };
            let comps = fiber_interval::enumerate_components_interval(d, None, &opts)?;
            (HomotopyType::Point, comps.len())
        }
    };
    Ok(FiberReport {
        c1: 0,
        homotopy_type,
        pi_n: BTreeMap::new(),
        assumptions,
        component_count: Some(count),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::persistence::Bar;

    fn bars(list: &[(u8, i64, Option<i64>)]) -> Barcode {
        Barcode::new(
            list.iter()
                .map(|(deg, b, d)| match d {
                    Some(d) => Bar::bounded(*deg, rat_int(*b), rat_int(*d)),
                    None => Bar::infinite(*deg, rat_int(*b)),
                })
                .collect(),
        )
    }

    #[test]
    fn sphere_height_function_has_no_saddles() {
        let d = bars(&[(0, 0, None), (2, 1, None)]);
        assert_eq!(saddle_count(&d, &SurfaceSpec::sphere()).unwrap(), 0);
    }

    #[test]
    fn torus_height_function_has_two_saddles() {
        let d = bars(&[(0, 0, None), (1, 1, None), (1, 2, None), (2, 3, None)]);
        let c1 = saddle_count(&d, &SurfaceSpec::torus()).unwrap();
        assert_eq!(c1, 2);
        // Euler characteristic accounting: c0 - c1 + c2 = chi = 0.
        assert_eq!(1 - c1 as i64 + 1, SurfaceSpec::torus().euler_characteristic());
    }

    #[test]
    fn disk_cone_over_boundary_minimum() {
        let d = bars(&[(0, 0, None), (1, 0, Some(1))]);
        assert_eq!(saddle_count(&d, &SurfaceSpec::disk(BoundaryTag::Min)).unwrap(), 0);
    }

    #[test]
    fn negative_count_is_rejected() {
        let d = bars(&[(0, 0, None)]);
        assert!(matches!(saddle_count(&d, &SurfaceSpec::sphere()), Err(Error::NegativeCount(_))));
    }

    #[test]
    fn inconsistent_infinite_bars_are_rejected() {
        let d = bars(&[(0, 0, None), (0, 1, None), (2, 2, None)]);
        assert!(matches!(saddle_count(&d, &SurfaceSpec::sphere()), Err(Error::NegativeCount(_))));
        let d = bars(&[(0, 0, None)]);
        assert!(matches!(saddle_count(&d, &SurfaceSpec::torus()), Err(Error::NegativeCount(_))));
    }

    #[test]
    fn closed_nonorientable_needs_beta2() {
        let d = bars(&[(0, 0, None), (1, 1, Some(2))]);
        let mut rp2 = SurfaceSpec::projective_plane(0);
        rp2.beta2 = None;
        assert!(matches!(saddle_count(&d, &rp2), Err(Error::InconsistentSurface(_))));
    }

    #[test]
    fn saddle_free_table() {
        let sphere = bars(&[(0, 0, None), (2, 1, None)]);
        assert_eq!(fiber_homotopy_type(&sphere, &SurfaceSpec::sphere()).unwrap().homotopy_type, HomotopyType::Sphere2);

        let disk = bars(&[(0, 0, None)]);
        let report = fiber_homotopy_type(&disk, &SurfaceSpec::disk(BoundaryTag::Max)).unwrap();
        assert_eq!(report.homotopy_type, HomotopyType::Point);
        assert!(report.pi_n.is_empty());

        let annulus = bars(&[(0, 0, None)]);
        let spec = SurfaceSpec::annulus([BoundaryTag::Max, BoundaryTag::Max]);
        assert_eq!(fiber_homotopy_type(&annulus, &spec).unwrap().homotopy_type, HomotopyType::Point);
    }

    #[test]
    fn positive_saddle_table() {
        // Sphere with two saddles: I_D = 4, c1 = 2.
        let d = bars(&[(0, 0, None), (0, 1, Some(2)), (1, 3, Some(4)), (2, 5, None)]);
        let report = fiber_homotopy_type(&d, &SurfaceSpec::sphere()).unwrap();
        assert_eq!(report.c1, 2);
        assert_eq!(report.homotopy_type, HomotopyType::So3CrossTorus(1));
        assert!(report.assumptions.distinct_endpoints);
        assert_eq!(report.pi_n[&2], SymbolicGroup::Trivial);
        assert_eq!(report.pi_n[&3], SymbolicGroup::Integers);

        let torus = bars(&[(0, 0, None), (1, 1, None), (1, 2, None), (2, 3, None)]);
        let report = fiber_homotopy_type(&torus, &SurfaceSpec::torus()).unwrap();
        assert_eq!(report.homotopy_type, HomotopyType::Torus(3));
        assert_eq!(report.pi_n[&3], SymbolicGroup::Trivial);
    }

    #[test]
    fn klein_bottle_bound() {
        // I_D = 5 over Z/2: c1 = 5 - 1 - 1 = 3.
        let d = bars(&[(0, 0, None), (0, 1, Some(2)), (1, 3, None), (1, 4, Some(5)), (2, 6, None)]);
        let report = fiber_homotopy_type(&d, &SurfaceSpec::klein_bottle(1)).unwrap();
        assert_eq!(report.c1, 3);
        assert_eq!(report.homotopy_type, HomotopyType::TorusUnknownPower { bound: 4 });
    }

    #[test]
    fn removed_disk_clause() {
        // Torus minus one disk, one saddle-pair barcode: I_D = 3, no
        // boundary minima, c1 = 2.
        let d = bars(&[(0, 0, None), (1, 1, None), (1, 2, None)]);
        let mut spec = SurfaceSpec::torus();
        spec.boundary = vec![BoundaryTag::Max];
        let report = fiber_homotopy_type(&d, &spec).unwrap();
        assert_eq!(report.c1, 2);
        assert_eq!(report.homotopy_type, HomotopyType::Torus(1));
    }

    #[test]
    fn mobius_strip_clause() {
        let d = bars(&[(0, 0, None), (1, 1, None)]);
        let report = fiber_homotopy_type(&d, &SurfaceSpec::mobius_strip(BoundaryTag::Max)).unwrap();
        assert_eq!(report.c1, 1);
        assert_eq!(report.homotopy_type, HomotopyType::Torus(1));
    }

    #[test]
    fn other_orientable_uses_euler_characteristic() {
        // Genus 2, chi = -2: height function has I_D = 1 + 4 + 1 bars.
        let d = bars(&[
            (0, 0, None),
            (1, 1, None),
            (1, 2, None),
            (1, 3, None),
            (1, 4, None),
            (2, 5, None),
        ]);
        let spec = SurfaceSpec { orientable: true, genus: 2, boundary: vec![], beta2: None };
        let report = fiber_homotopy_type(&d, &spec).unwrap();
        assert_eq!(report.c1, 4);
        assert_eq!(report.homotopy_type, HomotopyType::Torus(2));
    }

    #[test]
    fn homotopy_groups_need_saddles() {
        assert!(matches!(
            homotopy_groups(&SurfaceSpec::sphere(), 0, 2),
            Err(Error::RequiresPositiveSaddles)
        ));
        assert_eq!(homotopy_groups(&SurfaceSpec::sphere(), 1, 2).unwrap(), SymbolicGroup::Trivial);
        assert_eq!(homotopy_groups(&SurfaceSpec::torus(), 1, 3).unwrap(), SymbolicGroup::Trivial);
        assert_eq!(homotopy_groups(&SurfaceSpec::sphere(), 1, 3).unwrap(), SymbolicGroup::Integers);
        assert_eq!(
            homotopy_groups(&SurfaceSpec::projective_plane(0), 2, 5).unwrap(),
            SymbolicGroup::PiSphere2(5)
        );
    }

    #[test]
    fn one_dimensional_reports() {
        let d = Barcode::new(vec![
            Bar::infinite(0, rat_int(0)),
            Bar::bounded(0, rat(1, 5), rat(4, 5)),
            Bar::infinite(1, rat_int(1)),
        ]);
        let report = circle_interval_report(DomainKind::Circle, &d, false).unwrap();
        assert_eq!(report.homotopy_type, HomotopyType::Torus(1));
        assert_eq!(report.component_count, Some(2));

        let trivial = Barcode::trivial(DomainKind::Circle, &rat_int(3));
        let report = circle_interval_report(DomainKind::Circle, &trivial, false).unwrap();
        assert_eq!(report.homotopy_type, HomotopyType::Point);
        assert_eq!(report.component_count, Some(1));

        let d = Barcode::new(vec![Bar::infinite(0, rat_int(0)), Bar::bounded(0, rat(1, 5), rat(4, 5))]);
        let report = circle_interval_report(DomainKind::Interval, &d, false).unwrap();
        assert_eq!(report.homotopy_type, HomotopyType::Point);
        assert_eq!(report.component_count, Some(2));
    }

    #[test]
    fn display_round_trips() {
        let types = [
            HomotopyType::Point,
            HomotopyType::Sphere2,
            HomotopyType::Torus(1),
            HomotopyType::Torus(3),
            HomotopyType::So3CrossTorus(0),
            HomotopyType::So3CrossTorus(1),
            HomotopyType::So3CrossTorus(2),
            HomotopyType::TorusUnknownPower { bound: 4 },
        ];
        for ty in types {
            assert_eq!(ty.to_string().parse::<HomotopyType>().unwrap(), ty);
        }
        for g in [SymbolicGroup::Trivial, SymbolicGroup::Integers, SymbolicGroup::PiSphere2(6)] {
            assert_eq!(g.to_string().parse::<SymbolicGroup>().unwrap(), g);
        }
    }
}
