//! Bilinear-group kernels for the production backend.
//!
//! Exposes BLS12-381 (via arkworks) to Python as a symmetric-usable group:
//! every source-group element is a synchronized (G1, G2) pair with equal
//! discrete log, so it can appear on either side of the pairing. Scalars
//! cross the FFI boundary as 32-byte big-endian integers reduced mod r.

use ark_bls12_381::{Bls12_381, Fr, G1Affine, G1Projective, G2Affine, G2Projective};
use ark_ec::pairing::{Pairing, PairingOutput};
use ark_ec::Group;
use ark_ff::{BigInteger, PrimeField, Zero};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;

const G1_LEN: usize = 48;
const G2_LEN: usize = 96;
pub const G_LEN: usize = G1_LEN + G2_LEN;
pub const GT_LEN: usize = 576;

fn fr_from_be(k: &[u8]) -> Fr {
    Fr::from_be_bytes_mod_order(k)
}

/// Source-group element: (G1, G2) halves sharing one exponent.
#[pyclass(frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct G {
    p1: G1Projective,
    p2: G2Projective,
}

#[pymethods]
impl G {
    fn mul(&self, other: &G) -> G {
        G {
            p1: self.p1 + other.p1,
            p2: self.p2 + other.p2,
        }
    }

    fn exp(&self, k: &[u8]) -> G {
        let s = fr_from_be(k);
        G {
            p1: self.p1 * s,
            p2: self.p2 * s,
        }
    }

    fn is_identity(&self) -> bool {
        self.p1.is_zero()
    }

    fn to_bytes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyBytes>> {
        let mut out = Vec::with_capacity(G_LEN);
        let a1: G1Affine = self.p1.into();
        let a2: G2Affine = self.p2.into();
        a1.serialize_compressed(&mut out)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        a2.serialize_compressed(&mut out)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyBytes::new(py, &out))
    }
}

/// Target-group element (order-r subgroup of Fq12).
#[pyclass(frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Gt {
    v: PairingOutput<Bls12_381>,
}

#[pymethods]
impl Gt {
    fn mul(&self, other: &Gt) -> Gt {
        Gt { v: self.v + other.v }
    }

    fn exp(&self, k: &[u8]) -> Gt {
        Gt { v: self.v * fr_from_be(k) }
    }

    fn is_identity(&self) -> bool {
        self.v.is_zero()
    }

    fn to_bytes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyBytes>> {
        let mut out = Vec::with_capacity(GT_LEN);
        self.v
            .serialize_compressed(&mut out)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyBytes::new(py, &out))
    }
}

#[pyfunction]
fn generator() -> G {
    G {
        p1: G1Projective::generator(),
        p2: G2Projective::generator(),
    }
}

#[pyfunction]
fn identity() -> G {
    G {
        p1: G1Projective::zero(),
        p2: G2Projective::zero(),
    }
}

#[pyfunction]
fn gt_identity() -> Gt {
    Gt {
        v: PairingOutput::<Bls12_381>::zero(),
    }
}

#[pyfunction]
fn pair(a: &G, b: &G) -> Gt {
    Gt {
        v: Bls12_381::pairing(a.p1, b.p2),
    }
}

/// Decode a 144-byte element; validates curve and subgroup membership.
#[pyfunction]
fn g_from_bytes(data: &[u8]) -> PyResult<G> {
    if data.len() != G_LEN {
        return Err(PyValueError::new_err(format!(
            "expected {} bytes, got {}",
            G_LEN,
            data.len()
        )));
    }
    let a1 = G1Affine::deserialize_compressed(&data[..G1_LEN])
        .map_err(|e| PyValueError::new_err(format!("bad G1 half: {e}")))?;
    let a2 = G2Affine::deserialize_compressed(&data[G1_LEN..])
        .map_err(|e| PyValueError::new_err(format!("bad G2 half: {e}")))?;
    Ok(G {
        p1: a1.into(),
        p2: a2.into(),
    })
}

#[pyfunction]
fn gt_from_bytes(data: &[u8]) -> PyResult<Gt> {
    let v = PairingOutput::<Bls12_381>::deserialize_compressed(data)
        .map_err(|e| PyValueError::new_err(format!("bad Gt element: {e}")))?;
    Ok(Gt { v })
}

/// Group order r as big-endian bytes.
#[pyfunction]
fn order_be<'py>(py: Python<'py>) -> Bound<'py, PyBytes> {
    PyBytes::new(py, &Fr::MODULUS.to_bytes_be())
}

#[pymodule]
fn _blscore(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<G>()?;
    m.add_class::<Gt>()?;
    m.add_function(wrap_pyfunction!(generator, m)?)?;
    m.add_function(wrap_pyfunction!(identity, m)?)?;
    m.add_function(wrap_pyfunction!(gt_identity, m)?)?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(g_from_bytes, m)?)?;
    m.add_function(wrap_pyfunction!(gt_from_bytes, m)?)?;
    m.add_function(wrap_pyfunction!(order_be, m)?)?;
    m.add("G_LEN", G_LEN)?;
    m.add("GT_LEN", GT_LEN)?;
    Ok(())
}
