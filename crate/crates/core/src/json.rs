//! JSON records for paths.
//!
//! `{"cartan":[a,b],"lambda":[k,l],"dirs":[m1,...],"sigmas":[[num,den],...]}`
//! with the endpoints `0` and `1` included in `sigmas`.

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::lspath::{shape_orbit, LSPath};
use crate::numeric;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub cartan: [i64; 2],
    pub lambda: Weight,
    pub dirs: Vec<i64>,
    #[serde(serialize_with = "ser_sigmas", deserialize_with = "de_sigmas")]
    pub sigmas: Vec<BigRational>,
}

fn ser_sigmas<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let arr: Vec<serde_json::Value> = v.iter().map(numeric::fraction_to_json).collect();
    arr.serialize(s)
}

fn de_sigmas<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigRational>, D::Error> {
    let arr = Vec::<serde_json::Value>::deserialize(d)?;
    arr.iter()
        .map(|v| numeric::fraction_from_json(v).map_err(serde::de::Error::custom))
        .collect()
}

impl From<&LSPath> for PathRecord {
    fn from(p: &LSPath) -> Self {
        let c = p.cartan();
        PathRecord {
            cartan: [c.a(), c.b()],
            lambda: p.lambda().clone(),
            dirs: p.dirs().to_vec(),
            sigmas: p.sigmas().to_vec(),
        }
    }
}

impl PathRecord {
    pub fn to_path(&self) -> Result<LSPath> {
        let cartan = CartanData::new(self.cartan[0], self.cartan[1])?;
        let orbit = shape_orbit(cartan, self.lambda.clone())?;
        LSPath::validate(orbit, self.dirs.clone(), self.sigmas.clone())
    }
}

pub fn path_to_json(p: &LSPath) -> String {
    serde_json::to_string(&PathRecord::from(p)).expect("path records serialize")
}

pub fn path_from_json(s: &str) -> Result<LSPath> {
    parse_record(s)?.to_path()
}

pub fn parse_record(s: &str) -> Result<PathRecord> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::RootIndex;

    #[test]
    fn roundtrip() {
        let o = shape_orbit(CartanData::new(4, 3).unwrap(), Weight::from_i64(3, -2)).unwrap();
        let p = LSPath::pi_lambda(o).unwrap().e(RootIndex::Two).unwrap();
        let s = path_to_json(&p);
        assert_eq!(
            s,
            r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0,-1],"sigmas":[[0,1],[1,2],[1,1]]}"#
        );
        assert_eq!(path_from_json(&s).unwrap(), p);
    }

    #[test]
    fn rejects() {
        assert!(matches!(path_from_json("{"), Err(Error::Parse(_))));
        let bad = r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0,-1],"sigmas":[[0,1],[1,3],[1,1]]}"#;
        assert!(matches!(path_from_json(bad), Err(Error::ChainViolation(1))));
        let zero_den = r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,0],[1,1]]}"#;
        assert!(path_from_json(zero_den).is_err());
        let bad_cartan = r#"{"cartan":[2,2],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,1],[1,1]]}"#;
        assert!(matches!(path_from_json(bad_cartan), Err(Error::InvalidCartan { .. })));
    }
}
