//! The data bundle: graph6 files, signings, parity families and group
//! tables, each checked against a SHA-256 manifest when read.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};
use spectra_core::scheme::{CharacterTableData, GroupTable};
use spectra_core::{ExactMatrix, Graph};

use crate::formats::{character_table_from_json, group_table_from_json, matrix_from_json, ParityFixture};
use crate::graph6::load_graph6;
use crate::Error;

pub const DATA_DIR_ENV: &str = "SPECTRA_DATA_DIR";

macro_rules! embed {
    ($($f:literal),* $(,)?) => {
        &[$(($f, include_bytes!(concat!("../data/", $f)))),*]
    };
}

/// Copy of the data directory compiled into the binary.
const EMBEDDED: &[(&str, &[u8])] = embed!(
    "manifest.json",
    "clebsch.g6",
    "coxeter.g6",
    "halved_8_cube.g6",
    "heawood.g6",
    "heawood_distance_3.g6",
    "heawood_distance_3.signing.json",
    "icosahedron.g6",
    "m22.g6",
    "perkel.g6",
    "shrikhande.g6",
    "wells.g6",
    "hamming_2_3.parity.json",
    "shrikhande.parity.json",
    "icosahedron.parity.json",
    "kneser_7_3.parity.json",
    "coxeter.parity.json",
    "s3.group.json",
    "s3.characters.json",
    "s4.group.json",
    "s4.characters.json",
    "d4.group.json",
    "d4.characters.json",
    "d5.group.json",
    "d5.characters.json",
    "q8.group.json",
    "q8.characters.json",
);

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub sha256: String,
    #[serde(default)]
    pub vertices: Option<usize>,
    #[serde(default)]
    pub edges: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Directory(PathBuf),
    Embedded,
}

#[derive(Clone, Debug)]
pub struct Bundle {
    source: Source,
    manifest: BTreeMap<String, ManifestEntry>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{:02x}", b)).collect()
}

fn parse_manifest(bytes: &[u8]) -> Result<BTreeMap<String, ManifestEntry>, Error> {
    serde_json::from_slice(bytes).map_err(|e| Error::Bundle(format!("manifest: {}", e)))
}

impl Bundle {
    pub fn embedded() -> Result<Self, Error> {
        let manifest = parse_manifest(embedded_file("manifest.json").expect("manifest is embedded"))?;
        Ok(Bundle { source: Source::Embedded, manifest })
    }

    pub fn from_dir(dir: &Path) -> Result<Self, Error> {
        let path = dir.join("manifest.json");
        let bytes = std::fs::read(&path).map_err(|e| Error::Bundle(format!("{}: {}", path.display(), e)))?;
        Ok(Bundle { source: Source::Directory(dir.to_path_buf()), manifest: parse_manifest(&bytes)? })
    }

    /// An explicit directory wins, then `SPECTRA_DATA_DIR`, then the
    /// embedded copy.
    pub fn resolve(flag: Option<&Path>) -> Result<Self, Error> {
        if let Some(dir) = flag {
            return Bundle::from_dir(dir);
        }
        match std::env::var_os(DATA_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Bundle::from_dir(Path::new(&dir)),
            _ => Bundle::embedded(),
        }
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.manifest.keys().map(String::as_str)
    }

    pub fn entry(&self, name: &str) -> Result<&ManifestEntry, Error> {
        self.manifest.get(name).ok_or_else(|| Error::Bundle(format!("no bundle entry {:?}", name)))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.manifest.contains_key(name)
    }

    /// File contents after the checksum matches.
    pub fn bytes(&self, name: &str) -> Result<Vec<u8>, Error> {
        let entry = self.entry(name)?;
        let bytes = match &self.source {
            Source::Directory(dir) => {
                let path = dir.join(&entry.file);
                std::fs::read(&path).map_err(|e| Error::Bundle(format!("{}: {}", path.display(), e)))?
            }
            Source::Embedded => embedded_file(&entry.file)
                .ok_or_else(|| Error::Bundle(format!("{} is not embedded", entry.file)))?
                .to_vec(),
        };
        let got = sha256_hex(&bytes);
        if got != entry.sha256 {
            return Err(Error::Bundle(format!("{}: checksum {} does not match manifest {}", entry.file, got, entry.sha256)));
        }
        Ok(bytes)
    }

    pub fn graph(&self, name: &str) -> Result<Graph, Error> {
        let entry = self.entry(name)?;
        let g = load_graph6(&self.bytes(name)?)?;
        if entry.vertices.is_some_and(|v| v != g.n()) || entry.edges.is_some_and(|e| e != g.edge_count()) {
            return Err(Error::Bundle(format!(
                "{}: {} vertices and {} edges disagree with the manifest",
                name,
                g.n(),
                g.edge_count()
            )));
        }
        Ok(g)
    }

    pub fn matrix(&self, name: &str) -> Result<ExactMatrix, Error> {
        matrix_from_json(&self.text(name)?)
    }

    pub fn parity_fixture(&self, name: &str) -> Result<ParityFixture, Error> {
        serde_json::from_str(&self.text(name)?).map_err(|e| Error::Format(format!("{}: {}", name, e)))
    }

    /// Multiplication table and character table of a bundled group.
    pub fn group(&self, name: &str) -> Result<(GroupTable, CharacterTableData), Error> {
        let g = group_table_from_json(&self.text(&format!("{}.group", name))?)?;
        let c = character_table_from_json(&self.text(&format!("{}.characters", name))?)?;
        Ok((g, c))
    }

    /// Checksums of every entry, in name order.
    pub fn verify_all(&self) -> Vec<(String, Result<(), Error>)> {
        self.manifest.keys().map(|k| (k.clone(), self.bytes(k).map(|_| ()))).collect()
    }

    fn text(&self, name: &str) -> Result<String, Error> {
        String::from_utf8(self.bytes(name)?).map_err(|e| Error::Format(format!("{}: {}", name, e)))
    }
}

fn embedded_file(file: &str) -> Option<&'static [u8]> {
    EMBEDDED.iter().find(|(f, _)| *f == file).map(|(_, b)| *b)
}
