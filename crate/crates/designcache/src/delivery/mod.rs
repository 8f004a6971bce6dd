//! End-to-end execution of a caching scheme on byte payloads: generate a
//! library, fill caches from the matrix, XOR one coded transmission per
//! identity submatrix, decode at every user, and measure the rate.

pub mod rng;

pub use rng::SplitMix64;

use crate::caching::{
    build_scheme, verify_cover, CachingMatrix, Cover, Scheme, SchemeError, SchemeInput,
    SchemeMetrics,
};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Demand draws use a stream separated from library bytes by this tag, so
/// the same seed never correlates payload content with demand choices.
const DEMAND_STREAM_TAG: u64 = 0xD1B5_4A32_D192_ED03;

#[derive(Debug, Error)]
pub enum DeliveryError {
    #[error("library has {lib} subfiles per file but the matrix has {matrix} columns")]
    SubpacketizationMismatch { lib: usize, matrix: usize },
    #[error("user {user} lacks side information (file {file}, subfile {col})")]
    MissingSideInformation { user: usize, file: usize, col: usize },
    #[error("demand {demand} for user {user} is out of range for {n_files} files")]
    DemandOutOfRange { user: usize, demand: usize, n_files: usize },
    #[error("{got} demands supplied for {users} users")]
    DemandCountMismatch { users: usize, got: usize },
    #[error("cover failed verification before delivery")]
    InvalidCover,
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// N files of F·chunk bytes each. Subfile f of file i is the byte range
/// [f·chunk, (f+1)·chunk), with f indexing the caching matrix's columns.
#[derive(Debug, Clone)]
pub struct Library {
    n_files: usize,
    f: usize,
    chunk: usize,
    seed: u64,
    files: Vec<Vec<u8>>,
}

impl Library {
    pub fn n_files(&self) -> usize {
        self.n_files
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn chunk(&self) -> usize {
        self.chunk
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn file(&self, i: usize) -> &[u8] {
        &self.files[i]
    }

    pub fn subfile(&self, file: usize, col: usize) -> &[u8] {
        &self.files[file][col * self.chunk..(col + 1) * self.chunk]
    }
}

/// Deterministic library: one splitmix64 stream seeded with `seed` fills
/// the files in index order, each 64-bit output emitted little-endian.
pub fn make_library(n_files: usize, f: usize, chunk: usize, seed: u64) -> Library {
    assert!(n_files >= 1 && f >= 1 && chunk >= 1, "degenerate library");
    let mut gen = SplitMix64::new(seed);
    let files = (0..n_files)
        .map(|_| {
            let mut bytes = vec![0u8; f * chunk];
            gen.fill_bytes(&mut bytes);
            bytes
        })
        .collect();
    Library {
        n_files,
        f,
        chunk,
        seed,
        files,
    }
}

/// Per-user cache state: user u holds subfile f of every file exactly when
/// matrix entry (u, f) is 0, so each user stores N·(F−Q)·chunk bytes.
///
/// Bytes live in one flat buffer per user, zero-filled at the slots the
/// matrix marks uncached; presence is answered from the matrix itself, so
/// the buffer layout never leaks an uncached subfile as cached.
#[derive(Debug, Clone)]
pub struct CacheContents {
    n_files: usize,
    f: usize,
    chunk: usize,
    mask: crate::BitMatrix,
    bytes: Vec<Vec<u8>>,
}

impl CacheContents {
    pub fn users(&self) -> usize {
        self.bytes.len()
    }

    pub fn n_files(&self) -> usize {
        self.n_files
    }

    pub fn chunk(&self) -> usize {
        self.chunk
    }

    pub fn get(&self, user: usize, file: usize, col: usize) -> Option<&[u8]> {
        if self.mask.get(user, col) {
            return None;
        }
        let at = (file * self.f + col) * self.chunk;
        Some(&self.bytes[user][at..at + self.chunk])
    }

    /// Bytes held by one user, for checking the cache budget.
    pub fn bytes_for(&self, user: usize) -> usize {
        self.n_files * (self.f - self.mask.row_weight(user)) * self.chunk
    }
}

/// Fill every user's cache from the matrix: a 0 entry means "cache it".
pub fn place(matrix: &CachingMatrix, lib: &Library) -> Result<CacheContents, DeliveryError> {
    if lib.f() != matrix.f() {
        return Err(DeliveryError::SubpacketizationMismatch {
            lib: lib.f(),
            matrix: matrix.f(),
        });
    }
    let (n_files, f, chunk) = (lib.n_files(), lib.f(), lib.chunk());
    let bytes = (0..matrix.k())
        .map(|user| {
            let mut buf = vec![0u8; n_files * f * chunk];
            for col in 0..f {
                if !matrix.get(user, col) {
                    for file in 0..n_files {
                        let at = (file * f + col) * chunk;
                        buf[at..at + chunk].copy_from_slice(lib.subfile(file, col));
                    }
                }
            }
            buf
        })
        .collect();
    Ok(CacheContents {
        n_files,
        f,
        chunk,
        mask: matrix.bits().clone(),
        bytes,
    })
}

/// One demanded file index per user. Repeats are allowed; the scheme must
/// satisfy every demand vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DemandVector {
    demands: Vec<usize>,
}

impl DemandVector {
    pub fn new(demands: Vec<usize>, n_files: usize) -> Result<Self, DeliveryError> {
        for (user, &demand) in demands.iter().enumerate() {
            if demand >= n_files {
                return Err(DeliveryError::DemandOutOfRange {
                    user,
                    demand,
                    n_files,
                });
            }
        }
        Ok(DemandVector { demands })
    }

    /// Uniform demands with replacement, drawn from the tagged stream for
    /// `seed` so library bytes and demand choices never share a stream.
    pub fn random(users: usize, n_files: usize, seed: u64) -> Self {
        let mut gen = SplitMix64::new(seed ^ DEMAND_STREAM_TAG);
        let demands = (0..users)
            .map(|_| gen.next_below(n_files as u64) as usize)
            .collect();
        DemandVector { demands }
    }

    pub fn users(&self) -> usize {
        self.demands.len()
    }

    pub fn of(&self, user: usize) -> usize {
        self.demands[user]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.demands
    }
}

/// One pivot of a planned transmission: user u contributes subfile `col`
/// of its demanded file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannedPivot {
    pub user: usize,
    pub file: usize,
    pub col: usize,
}

/// The pivot list of one identity submatrix, annotated with demands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransmissionPlan {
    pub pivots: Vec<PlannedPivot>,
}

/// One plan per identity submatrix, in cover order.
pub fn schedule(cover: &Cover, demands: &DemandVector) -> Vec<TransmissionPlan> {
    cover
        .submatrices
        .iter()
        .map(|sub| TransmissionPlan {
            pivots: sub
                .pivots
                .iter()
                .map(|&(user, col)| PlannedPivot {
                    user,
                    file: demands.of(user),
                    col,
                })
                .collect(),
        })
        .collect()
}

/// A coded transmission: the XOR over the plan's pivots of subfile
/// (file, col), plus the pivot metadata receivers need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transmission {
    pub payload: Vec<u8>,
    pub pivots: Vec<PlannedPivot>,
}

impl Transmission {
    pub fn payload_hex(&self) -> String {
        self.payload.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Serialize for Transmission {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("Transmission", 2)?;
        st.serialize_field("payload_hex", &self.payload_hex())?;
        st.serialize_field("pivots", &self.pivots)?;
        st.end()
    }
}

fn xor_into(acc: &mut [u8], block: &[u8]) {
    debug_assert_eq!(acc.len(), block.len());
    for (a, b) in acc.iter_mut().zip(block) {
        *a ^= b;
    }
}

/// XOR the referenced subfiles of each plan into one chunk-sized payload.
pub fn encode(plans: &[TransmissionPlan], lib: &Library) -> Vec<Transmission> {
    plans
        .iter()
        .map(|plan| {
            let mut payload = vec![0u8; lib.chunk()];
            for p in &plan.pivots {
                xor_into(&mut payload, lib.subfile(p.file, p.col));
            }
            Transmission {
                payload,
                pivots: plan.pivots.clone(),
            }
        })
        .collect()
}

/// Outcome of a full delivery round, in the shape reports are exchanged in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub scheme: String,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "F")]
    pub f: usize,
    #[serde(rename = "S")]
    pub s: usize,
    pub rate: Rational,
    pub expected_rate: Rational,
    #[serde(rename = "match")]
    pub rate_matches: bool,
    pub seed: u64,
    pub demands: Vec<usize>,
    pub all_decoded: bool,
    pub failures: Vec<usize>,
}

/// Run every user's decoder and compare its reassembled file against the
/// library byte for byte.
///
/// A user u takes each transmission in which it is a pivot and XORs back
/// out, from its own cache, the subfiles the other pivots contributed;
/// what remains is its missing subfile for that column. Its demanded file
/// is then stitched from cached columns and recovered columns. A needed
/// side subfile absent from the cache is an error (it means an invalid
/// cover reached the simulator); a column never recovered is a per-user
/// failure, not an error.
pub fn decode_all(
    transmissions: &[Transmission],
    caches: &CacheContents,
    demands: &DemandVector,
    matrix: &CachingMatrix,
    lib: &Library,
    metrics: &SchemeMetrics,
    seed: u64,
) -> Result<SimulationReport, DeliveryError> {
    if demands.users() != matrix.k() {
        return Err(DeliveryError::DemandCountMismatch {
            users: matrix.k(),
            got: demands.users(),
        });
    }
    let chunk = lib.chunk();
    let mut failures = Vec::new();
    for user in 0..matrix.k() {
        let wanted = demands.of(user);
        // recovered[col] = the missing subfile bytes once some transmission
        // pivoted on (user, col) has been processed
        let mut recovered: Vec<Option<Vec<u8>>> = vec![None; matrix.f()];
        for tx in transmissions {
            let Some(own) = tx.pivots.iter().find(|p| p.user == user) else {
                continue;
            };
            let mut block = tx.payload.clone();
            for other in tx.pivots.iter().filter(|p| p.user != user) {
                let side = caches.get(user, other.file, other.col).ok_or(
                    DeliveryError::MissingSideInformation {
                        user,
                        file: other.file,
                        col: other.col,
                    },
                )?;
                xor_into(&mut block, side);
            }
            recovered[own.col] = Some(block);
        }
        let mut rebuilt = Vec::with_capacity(matrix.f() * chunk);
        let mut complete = true;
        for col in 0..matrix.f() {
            if let Some(bytes) = caches.get(user, wanted, col) {
                rebuilt.extend_from_slice(bytes);
            } else if let Some(bytes) = &recovered[col] {
                rebuilt.extend_from_slice(bytes);
            } else {
                complete = false;
                break;
            }
        }
        if !(complete && rebuilt == lib.file(wanted)) {
            failures.push(user);
        }
    }

    let s = transmissions.len();
    let rate = Rational::of_counts(s, matrix.f());
    let expected_rate = metrics.expected.rate;
    Ok(SimulationReport {
        scheme: metrics.scheme.clone(),
        k: matrix.k(),
        f: matrix.f(),
        s,
        rate,
        expected_rate,
        rate_matches: rate == expected_rate,
        seed,
        demands: demands.as_slice().to_vec(),
        all_decoded: failures.is_empty(),
        failures,
    })
}

/// Full pipeline: build the scheme, verify its cover, generate a library,
/// place caches, draw seeded demands, transmit, and decode everywhere.
pub fn simulate(
    scheme: Scheme,
    input: SchemeInput<'_>,
    t_override: Option<usize>,
    n_files: usize,
    chunk: usize,
    seed: u64,
) -> Result<SimulationReport, DeliveryError> {
    let (matrix, cover, metrics) = build_scheme(scheme, input, t_override)?;
    if !verify_cover(&matrix, &cover).is_valid_cover {
        return Err(DeliveryError::InvalidCover);
    }
    let lib = make_library(n_files, matrix.f(), chunk, seed);
    let caches = place(&matrix, &lib)?;
    let demands = DemandVector::random(matrix.k(), n_files, seed);
    let plans = schedule(&cover, &demands);
    let transmissions = encode(&plans, &lib);
    decode_all(
        &transmissions,
        &caches,
        &demands,
        &matrix,
        &lib,
        &metrics,
        seed,
    )
}
