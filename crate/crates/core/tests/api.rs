use std::sync::Arc;

use num_bigint::BigInt;

use mccool::freelie::{Alphabet, LieElement};
use mccool::johnson::{kernel_report, omega, KernelOptions, SymbolSet, TauEngine};
use mccool::psigma3::{sd_bracket, sd_s3_action, SdElement};
use mccool::stabilization::{iota_sym, pi_sym, IndexTriple};
use mccool::symmetry::{act, S3Element};
use mccool::Ring;

#[test]
fn kernel_json_round_trip() {
    let engine = TauEngine::new(SymbolSet::abc());
    let r = kernel_report(&engine, 7, &KernelOptions::default()).unwrap();
    let text = serde_json::to_string(&r.to_json()).unwrap();
    let back: mccool::johnson::KernelReportJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.kernel_dim, 6);
    let alpha = SymbolSet::abc().alphabet().clone();
    for (json, b) in back.basis.iter().zip(&r.basis) {
        assert_eq!(&LieElement::<BigInt>::from_json_in(&alpha, json).unwrap(), b);
    }
}

#[test]
fn rational_basis_spans_the_same_space() {
    let engine = TauEngine::new(SymbolSet::abc());
    let opts = KernelOptions { ring: Ring::Rationals, ..Default::default() };
    let r = kernel_report(&engine, 7, &opts).unwrap();
    let q = r.rational_basis.as_ref().unwrap();
    assert_eq!(q.len(), r.basis.len());
    for b in &r.basis {
        assert!(engine.evaluate(b).unwrap().is_zero());
    }
}

#[test]
fn kernel_is_stable_under_the_group() {
    let engine = TauEngine::new(SymbolSet::abc());
    let r = kernel_report(&engine, 7, &KernelOptions::default()).unwrap();
    for s in S3Element::all() {
        for b in &r.basis {
            assert!(engine.evaluate(&act(&s, b).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn omega_survives_stabilization() {
    let w = omega();
    let i = IndexTriple::new(6, [2, 4, 5]).unwrap();
    let up = iota_sym(&i, &w).unwrap();
    assert!(TauEngine::new(SymbolSet::mccool(6)).evaluate(&up).unwrap().is_zero());
    let down = pi_sym(&i, &up).unwrap();
    assert_eq!(down.len(), w.len());
}

#[test]
fn semidirect_product_by_hand() {
    let c = |m| SdElement::inner_generator(m);
    let x = sd_bracket(&SdElement::kappa(3, 2), &c(1)).unwrap();
    let y = sd_s3_action(&S3Element::T12, &x).unwrap();
    let z = sd_bracket(&sd_s3_action(&S3Element::T12, &SdElement::kappa(3, 2)).unwrap(), &c(2)).unwrap();
    assert_eq!(y, z);
    let alpha: Arc<Alphabet> = mccool::psigma3::inner_alphabet();
    assert_eq!(x.h().alphabet(), &alpha);
}
