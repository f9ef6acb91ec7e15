//! JSON shapes for groups, subsets and generator sequences.
//!
//! * group: `{"moduli":[m1,...,mn]}`
//! * set: `{"group":{...},"elements":[[g1,...],...]}`, elements in index order
//! * generators: same shape as a set, element order preserved
//!
//! Lattice sets (`{"dim":n,"points":[...]}`) derive their format in
//! [`crate::downset`].

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Element, GeneratorSeq, GroupSet, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub moduli: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDescriptor {
    pub group: GroupDescriptor,
    pub elements: Vec<Vec<u64>>,
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupDescriptor {
            moduli: self.moduli().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = GroupDescriptor::deserialize(d)?;
        GroupSpec::new(desc.moduli).map_err(serde::de::Error::custom)
    }
}

fn describe<'a>(spec: &GroupSpec, elements: impl Iterator<Item = &'a Element>) -> SetDescriptor {
    SetDescriptor {
        group: GroupDescriptor {
            moduli: spec.moduli().to_vec(),
        },
        elements: elements
            .map(|g| g.coords().iter().map(|&c| c as u64).collect())
            .collect(),
    }
}

fn parse_elements(desc: &SetDescriptor) -> Result<(GroupSpec, Vec<Element>)> {
    let spec = GroupSpec::new(desc.group.moduli.clone())?;
    let elements = desc
        .elements
        .iter()
        .map(|c| spec.element(c))
        .collect::<Result<Vec<_>>>()?;
    Ok((spec, elements))
}

impl GroupSet {
    pub fn to_descriptor(&self) -> SetDescriptor {
        let elements: Vec<Element> = self.elements().collect();
        describe(self.spec(), elements.iter())
    }

    pub fn from_descriptor(desc: &SetDescriptor) -> Result<Self> {
        let (spec, elements) = parse_elements(desc)?;
        GroupSet::from_elements(&spec, &elements)
    }
}

impl GeneratorSeq {
    pub fn to_descriptor(&self) -> SetDescriptor {
        describe(self.spec(), self.elements().iter())
    }

    pub fn from_descriptor(desc: &SetDescriptor) -> Result<Self> {
        let (spec, elements) = parse_elements(desc)?;
        GeneratorSeq::new(&spec, elements)
    }
}

impl Serialize for GroupSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = SetDescriptor::deserialize(d)?;
        GroupSet::from_descriptor(&desc).map_err(serde::de::Error::custom)
    }
}

impl Serialize for GeneratorSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = SetDescriptor::deserialize(d)?;
        GeneratorSeq::from_descriptor(&desc).map_err(serde::de::Error::custom)
    }
}

/// Reads and deserializes a JSON file.
pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_json() {
        let g: GroupSpec = serde_json::from_str(r#"{"moduli":[2,4]}"#).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"moduli":[2,4]}"#);
        assert!(serde_json::from_str::<GroupSpec>(r#"{"moduli":[1]}"#).is_err());
    }

    #[test]
    fn sets_serialize_in_index_order() {
        let json = r#"{"group":{"moduli":[2,4]},"elements":[[1,3],[0,0],[1,0]]}"#;
        let a: GroupSet = serde_json::from_str(json).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"group":{"moduli":[2,4]},"elements":[[0,0],[1,0],[1,3]]}"#
        );
        let bad = r#"{"group":{"moduli":[2,4]},"elements":[[2,0]]}"#;
        assert!(serde_json::from_str::<GroupSet>(bad).is_err());
    }

    #[test]
    fn generators_keep_their_order() {
        let json = r#"{"group":{"moduli":[3,3]},"elements":[[0,1],[1,0]]}"#;
        let s: GeneratorSeq = serde_json::from_str(json).unwrap();
        assert_eq!(s.elements()[0].coords(), &[0, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), json);
        let dup = r#"{"group":{"moduli":[3,3]},"elements":[[0,1],[0,1]]}"#;
        assert!(serde_json::from_str::<GeneratorSeq>(dup).is_err());
    }

    proptest::proptest! {
        #[test]
        fn set_round_trip(mask in proptest::prelude::any::<u32>()) {
            let g = GroupSpec::new(vec![2, 3, 5]).unwrap();
            let a = GroupSet::from_indices(&g, (0..30).filter(|i| mask >> i & 1 == 1));
            let back: GroupSet = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            proptest::prop_assert_eq!(back, a);
        }
    }
}
