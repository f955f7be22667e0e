//! Instance files: `{"points":<n>,"lines":[[...],...]}` with lines written in
//! lexicographic order, followed by a newline. Labeling sidecars list
//! `[index, label]` pairs for points and lines.

use serde::{Deserialize, Serialize};

use crate::constructions::ConstructionLabeling;
use crate::error::{Error, Result};
use crate::system::LinearSystem;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    points: usize,
    lines: Vec<Vec<usize>>,
}

/// Encodes `s` in the instance format. Lines are emitted in lexicographic
/// order regardless of their order in `s`.
pub fn to_instance_string(s: &LinearSystem) -> String {
    encode_lines(s.num_points(), s.lines().to_vec())
}

/// The instance encoding of an arbitrary line list, sorted first.
pub(crate) fn encode_lines(points: usize, mut lines: Vec<Vec<usize>>) -> String {
    lines.sort();
    let file = InstanceFile { points, lines };
    let mut out = serde_json::to_string(&file).expect("instance serialization is infallible");
    out.push('\n');
    out
}

/// Parses and validates an instance document. Every line must be strictly
/// increasing.
pub fn from_instance_str(text: &str) -> Result<LinearSystem> {
    let file: InstanceFile = serde_json::from_str(text)?;
    for (idx, line) in file.lines.iter().enumerate() {
        if line.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("line {idx} is not strictly increasing")));
        }
    }
    LinearSystem::new(file.points, file.lines)
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct LabelFile {
    name: String,
    points: Vec<(usize, String)>,
    lines: Vec<(usize, String)>,
}

/// Sidecar for a system written with [`to_instance_string`]. Line indices
/// refer to the lexicographic order used in the instance file.
pub fn to_label_string(s: &LinearSystem, labels: &ConstructionLabeling) -> String {
    let (_, order) = s.sorted_lines();
    let file = LabelFile {
        name: labels.name.clone(),
        points: labels.point_labels.iter().cloned().enumerate().collect(),
        lines: order
            .iter()
            .enumerate()
            .map(|(new, &old)| (new, labels.line_labels[old].clone()))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("label serialization is infallible");
    out.push('\n');
    out
}

pub fn from_label_str(text: &str) -> Result<ConstructionLabeling> {
    let file: LabelFile = serde_json::from_str(text)?;
    let unpack = |pairs: Vec<(usize, String)>| -> Result<Vec<String>> {
        pairs
            .into_iter()
            .enumerate()
            .map(|(i, (idx, label))| {
                if i == idx {
                    Ok(label)
                } else {
                    Err(Error::Parse(format!("label index {idx} out of order")))
                }
            })
            .collect()
    };
    Ok(ConstructionLabeling {
        name: file.name,
        point_labels: unpack(file.points)?,
        line_labels: unpack(file.lines)?,
    })
}
