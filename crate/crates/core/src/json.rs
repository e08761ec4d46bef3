//! JSON schemas for the external interfaces.
//!
//! Scalars serialize as JSON numbers whenever the value has a terminating
//! decimal expansion and as exact `"p/q"` strings otherwise; both forms
//! (plus decimal strings) are accepted on input, so round trips are exact.
//! Infinite bar deaths are the string `"inf"`.

use crate::error::Error;
use crate::fiber_circle::FiberComponentCircle;
use crate::fiber_interval::FiberComponentInterval;
use crate::num::{format_rat, parse_rat, Rat};
use crate::persistence::{Bar, Barcode};
use crate::pl::{DomainKind, PLFunction, Reparametrization};
use crate::surface::{Assumptions, BoundaryTag, FiberReport, HomotopyType, SurfaceSpec, SymbolicGroup};
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

struct Scalar<'a>(&'a Rat);

impl Serialize for Scalar<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let text = format_rat(self.0);
        if text.contains('/') {
            serializer.serialize_str(&text)
        } else {
            // arbitrary-precision Number keeps the exact decimal token
            serde_json::Number::from_str(&text)
                .map_err(serde::ser::Error::custom)?
                .serialize(serializer)
        }
    }
}

struct ScalarSeq<'a>(&'a [Rat]);

impl Serialize for ScalarSeq<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for r in self.0 {
            seq.serialize_element(&Scalar(r))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Num(serde_json::Number),
    Str(String),
}

impl ScalarRepr {
    fn to_rat(&self) -> Result<Rat, Error> {
        match self {
            ScalarRepr::Num(n) => Ok(parse_rat(&n.to_string())?),
            ScalarRepr::Str(s) => Ok(parse_rat(s)?),
        }
    }
}

fn rats<E: serde::de::Error>(xs: &[ScalarRepr]) -> Result<Vec<Rat>, E> {
    xs.iter().map(|x| x.to_rat().map_err(E::custom)).collect()
}

impl Serialize for PLFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PLFunction", 3)?;
        st.serialize_field("domain", self.domain().as_str())?;
        st.serialize_field("breakpoints", &ScalarSeq(self.breakpoints()))?;
        st.serialize_field("values", &ScalarSeq(self.values()))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PLFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            domain: String,
            breakpoints: Vec<ScalarRepr>,
            values: Vec<ScalarRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let domain = DomainKind::from_str(&repr.domain).map_err(D::Error::custom)?;
        PLFunction::new(domain, rats(&repr.breakpoints)?, rats(&repr.values)?).map_err(D::Error::custom)
    }
}

impl Serialize for Reparametrization {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let offset = match self.domain() {
            DomainKind::Interval => Rat::from_integer(0.into()),
            DomainKind::Circle => self.values()[0].floor(),
        };
        let phi: Vec<Rat> = self.values().iter().map(|v| v - &offset).collect();
        let mut st = serializer.serialize_struct("Reparametrization", 4)?;
        st.serialize_field("domain", self.domain().as_str())?;
        st.serialize_field("s", &ScalarSeq(self.breakpoints()))?;
        st.serialize_field("phi", &ScalarSeq(&phi))?;
        st.serialize_field("lift_offset", &offset.to_integer().to_i64().unwrap_or(0))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Reparametrization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            domain: String,
            s: Vec<ScalarRepr>,
            phi: Vec<ScalarRepr>,
            #[serde(default)]
            lift_offset: i64,
        }
        let repr = Repr::deserialize(deserializer)?;
        let domain = DomainKind::from_str(&repr.domain).map_err(D::Error::custom)?;
        let breakpoints = rats(&repr.s)?;
        let offset = Rat::from_integer(repr.lift_offset.into());
        let values: Vec<Rat> = rats::<D::Error>(&repr.phi)?.into_iter().map(|v| v + &offset).collect();
        match domain {
            DomainKind::Interval => Reparametrization::new_interval(breakpoints, values),
            DomainKind::Circle => Reparametrization::new_circle(breakpoints, values),
        }
        .map_err(D::Error::custom)
    }
}

impl Serialize for Bar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Bar", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("birth", &Scalar(&self.birth))?;
        match &self.death {
            Some(d) => st.serialize_field("death", &Scalar(d))?,
            None => st.serialize_field("death", "inf")?,
        }
        st.end()
    }
}

impl<'de> Deserialize<'de> for Bar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: u8,
            birth: ScalarRepr,
            death: ScalarRepr,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.degree > 2 {
            return Err(D::Error::custom("bar degree must be 0, 1 or 2"));
        }
        let birth = repr.birth.to_rat().map_err(D::Error::custom)?;
        let death = match &repr.death {
            ScalarRepr::Str(s) if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") => None,
            other => Some(other.to_rat().map_err(D::Error::custom)?),
        };
        if let Some(d) = &death {
            if *d <= birth {
                return Err(D::Error::custom("bar death must exceed its birth"));
            }
        }
        Ok(match death {
            Some(d) => Bar::bounded(repr.degree, birth, d),
            None => Bar::infinite(repr.degree, birth),
        })
    }
}

impl Serialize for Barcode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Barcode", 1)?;
        st.serialize_field("bars", self.bars())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Barcode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            bars: Vec<Bar>,
        }
        Ok(Barcode::new(Repr::deserialize(deserializer)?.bars))
    }
}

impl Serialize for BoundaryTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BoundaryTag", 1)?;
        st.serialize_field("tag", match self {
            BoundaryTag::Min => "min",
            BoundaryTag::Max => "max",
        })?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for BoundaryTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            tag: String,
        }
        match Repr::deserialize(deserializer)?.tag.to_ascii_lowercase().as_str() {
            "min" => Ok(BoundaryTag::Min),
            "max" => Ok(BoundaryTag::Max),
            other => Err(D::Error::custom(format!("boundary tag must be min or max, got `{other}`"))),
        }
    }
}

impl Serialize for SurfaceSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = 3 + self.beta2.is_some() as usize;
        let mut st = serializer.serialize_struct("SurfaceSpec", n)?;
        st.serialize_field("orientable", &self.orientable)?;
        st.serialize_field("genus", &self.genus)?;
        st.serialize_field("boundary", &self.boundary)?;
        if let Some(b2) = self.beta2 {
            st.serialize_field("beta2", &b2)?;
        }
        st.end()
    }
}

impl<'de> Deserialize<'de> for SurfaceSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            orientable: bool,
            genus: u32,
            #[serde(default)]
            boundary: Vec<BoundaryTag>,
            #[serde(default)]
            beta2: Option<u32>,
        }
        let r = Repr::deserialize(deserializer)?;
        Ok(SurfaceSpec { orientable: r.orientable, genus: r.genus, boundary: r.boundary, beta2: r.beta2 })
    }
}

impl Serialize for HomotopyType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HomotopyType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(D::Error::custom)
    }
}

impl Serialize for SymbolicGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SymbolicGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(D::Error::custom)
    }
}

impl Serialize for Assumptions {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Assumptions", 2)?;
        st.serialize_field("distinct_endpoints", &self.distinct_endpoints)?;
        st.serialize_field("c1_positive", &self.c1_positive)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Assumptions {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            distinct_endpoints: bool,
            c1_positive: bool,
        }
        let r = Repr::deserialize(deserializer)?;
        Ok(Assumptions { distinct_endpoints: r.distinct_endpoints, c1_positive: r.c1_positive })
    }
}

impl Serialize for FiberReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = 4 + self.component_count.is_some() as usize;
        let mut st = serializer.serialize_struct("FiberReport", n)?;
        st.serialize_field("c1", &self.c1)?;
        st.serialize_field("homotopy_type", &self.homotopy_type)?;
        st.serialize_field("pi_n", &self.pi_n)?;
        st.serialize_field("assumptions", &self.assumptions)?;
        if let Some(count) = self.component_count {
            st.serialize_field("component_count", &count)?;
        }
        st.end()
    }
}

impl<'de> Deserialize<'de> for FiberReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            c1: u32,
            homotopy_type: HomotopyType,
            pi_n: std::collections::BTreeMap<u32, SymbolicGroup>,
            assumptions: Assumptions,
            #[serde(default)]
            component_count: Option<usize>,
        }
        let r = Repr::deserialize(deserializer)?;
        Ok(FiberReport {
            c1: r.c1,
            homotopy_type: r.homotopy_type,
            pi_n: r.pi_n,
            assumptions: r.assumptions,
            component_count: r.component_count,
        })
    }
}

impl Serialize for FiberComponentCircle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FiberComponentCircle", 4)?;
        st.serialize_field("n", &self.pair_count())?;
        match self.class() {
            Some(class) => st.serialize_field("class", &ScalarSeq(class.normal_form().values()))?,
            None => st.serialize_field("class", &Option::<()>::None)?,
        }
        st.serialize_field("canonical", self.canonical())?;
        st.serialize_field("barcode", self.barcode())?;
        st.end()
    }
}

impl Serialize for FiberComponentInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FiberComponentInterval", 5)?;
        st.serialize_field("sequence", &ScalarSeq(self.sequence().values()))?;
        st.serialize_field("starts_with_min", &self.sequence().starts_with_min())?;
        match self.boundary() {
            Some((b0, b1)) => st.serialize_field("boundary", &[Scalar(b0), Scalar(b1)])?,
            None => st.serialize_field("boundary", &Option::<()>::None)?,
        }
        st.serialize_field("canonical", self.canonical())?;
        st.serialize_field("barcode", self.barcode())?;
        st.end()
    }
}
