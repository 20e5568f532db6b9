//! Curve25519 key material: X25519 derivation with clamping, identity
//! signing keys, and the deterministic seed-splitting scheme used by the
//! population synthesizer.
//!
//! Identity keys are Ed25519 pairs operated on the raw scalar. The scalar is
//! negated when necessary so the Edwards public point always has sign bit 0;
//! that makes the Edwards form recoverable from the Montgomery (X25519) form
//! alone, so prekey dumps only need to carry one identity key encoding and
//! signatures stay verifiable downstream.

use curve25519_dalek::edwards::EdwardsPoint;
use curve25519_dalek::montgomery::MontgomeryPoint;
use curve25519_dalek::scalar::{clamp_integer, Scalar};
use ed25519_dalek::hazmat::{raw_sign, ExpandedSecretKey};
use ed25519_dalek::{Signature, VerifyingKey};
use sha2::{Digest, Sha256, Sha512};

pub const KEY_LEN: usize = 32;
pub const SIG_LEN: usize = 64;

/// X25519 scalar clamping: clear bits 0..=2, clear bit 255, set bit 254.
pub fn clamp(scalar: [u8; 32]) -> [u8; 32] {
    clamp_integer(scalar)
}

/// Derive the X25519 public key for a private scalar (base-point variant).
/// The scalar is clamped before multiplication.
pub fn derive_public(scalar: [u8; 32]) -> [u8; 32] {
    EdwardsPoint::mul_base_clamped(scalar)
        .to_montgomery()
        .to_bytes()
}

/// General X25519: clamped scalar multiplication against an arbitrary
/// u-coordinate. Only used by reference-vector oracles and tests.
pub fn x25519(scalar: [u8; 32], u: [u8; 32]) -> [u8; 32] {
    MontgomeryPoint(u).mul_clamped(scalar).to_bytes()
}

/// Public key of the all-zero private scalar (after clamping).
pub fn zero_key_public() -> [u8; 32] {
    derive_public([0u8; 32])
}

/// An Ed25519 identity key operated on the raw scalar, normalized so the
/// Edwards public point has sign bit 0.
pub struct IdentityKey {
    scalar: Scalar,
    hash_prefix: [u8; 32],
    ed_pub: [u8; 32],
    x_pub: [u8; 32],
}

impl IdentityKey {
    /// Deterministically derive an identity key from a 32-byte seed.
    pub fn from_seed(seed: &[u8; 32]) -> Self {
        let scalar_bytes = clamp(subseed(seed, "identity-scalar", 0));
        let prefix = subseed(seed, "identity-prefix", 0);
        Self::from_scalar_bytes(scalar_bytes, prefix)
    }

    /// Build an identity key from explicit (clamped) scalar bytes. Used for
    /// the all-zero-key anomaly, where the scalar is fixed rather than drawn
    /// from a seed.
    pub fn from_scalar_bytes(clamped: [u8; 32], hash_prefix: [u8; 32]) -> Self {
        let mut scalar = Scalar::from_bytes_mod_order(clamp(clamped));
        let mut point = EdwardsPoint::mul_base(&scalar);
        let mut compressed = point.compress();
        if compressed.as_bytes()[31] & 0x80 != 0 {
            // Negating the scalar flips the Edwards x-coordinate sign while
            // keeping the Montgomery u-coordinate unchanged.
            scalar = -scalar;
            point = -point;
            compressed = point.compress();
        }
        let x_pub = point.to_montgomery().to_bytes();
        IdentityKey {
            scalar,
            hash_prefix,
            ed_pub: compressed.to_bytes(),
            x_pub,
        }
    }

    /// Edwards-form public key (sign bit always 0).
    pub fn ed_public(&self) -> [u8; 32] {
        self.ed_pub
    }

    /// Montgomery-form (X25519) public key.
    pub fn x_public(&self) -> [u8; 32] {
        self.x_pub
    }

    /// Produce an Ed25519 signature over `message`.
    pub fn sign(&self, message: &[u8]) -> [u8; 64] {
        let esk = ExpandedSecretKey {
            scalar: self.scalar,
            hash_prefix: self.hash_prefix,
        };
        let vk = VerifyingKey::from_bytes(&self.ed_pub).expect("own key is a valid point");
        raw_sign::<Sha512>(&esk, message, &vk).to_bytes()
    }
}

/// Reconstruct the Edwards verification key from an X25519 public key,
/// assuming the sign-0 normalization used by [`IdentityKey`].
pub fn edwards_from_x25519(x_pub: &[u8; 32]) -> Option<VerifyingKey> {
    let ed = MontgomeryPoint(*x_pub).to_edwards(0)?;
    VerifyingKey::from_bytes(&ed.compress().to_bytes()).ok()
}

/// Verify an Ed25519 signature over `message` given only the signer's
/// X25519 identity public key.
pub fn verify_with_x25519(x_pub: &[u8; 32], message: &[u8], signature: &[u8; 64]) -> bool {
    let Some(vk) = edwards_from_x25519(x_pub) else {
        return false;
    };
    let sig = Signature::from_bytes(signature);
    vk.verify_strict(message, &sig).is_ok()
}

/// Derive a labeled child seed. The scheme is a plain SHA-256 over
/// `parent || label || index`, which keeps every stage of an experiment
/// reproducible from one root seed.
pub fn subseed(parent: &[u8; 32], label: &str, index: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(parent);
    h.update([label.len() as u8]);
    h.update(label.as_bytes());
    h.update(index.to_le_bytes());
    h.finalize().into()
}

/// Root seed expansion from a 64-bit experiment seed.
pub fn root_seed(seed: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(b"enumlab-root");
    h.update(seed.to_le_bytes());
    h.finalize().into()
}

/// X25519 private scalar for a labeled slot under a device seed.
pub fn x25519_private(seed: &[u8; 32], label: &str, index: u64) -> [u8; 32] {
    clamp(subseed(seed, label, index))
}
