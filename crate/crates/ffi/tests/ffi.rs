use std::ffi::{CStr, CString};
use std::ptr;

use mccool_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mccool_string_free(s);
    out
}

#[test]
fn omega_round_trip() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(mccool_omega(&mut w), MccoolStatus::Ok);
        let mut degree = 0;
        assert_eq!(mccool_polynomial_degree(w, &mut degree), MccoolStatus::Ok);
        assert_eq!(degree, 6);
        let mut vanishes = false;
        assert_eq!(mccool_tau_vanishes(w, &mut vanishes), MccoolStatus::Ok);
        assert!(vanishes);
        let mut json = ptr::null_mut();
        assert_eq!(mccool_polynomial_to_json(w, &mut json), MccoolStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(mccool_polynomial_from_json(text.as_ptr(), &mut back), MccoolStatus::Ok);
        let (mut s1, mut s2) = (ptr::null_mut(), ptr::null_mut());
        mccool_polynomial_to_string(w, &mut s1);
        mccool_polynomial_to_string(back, &mut s2);
        assert_eq!(take_string(s1), take_string(s2));
        mccool_polynomial_free(back);
        mccool_polynomial_free(w);
    }
}

#[test]
fn kernel_handle() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(mccool_kernel_compute(7, &mut k), MccoolStatus::Ok);
        let (mut dim, mut domain) = (0, 0);
        mccool_kernel_dim(k, &mut dim);
        mccool_kernel_domain_dim(k, &mut domain);
        assert_eq!((dim, domain), (6, 312));
        assert_eq!(domain as u64, mccool_witt_dimension(3, 7));
        let mut chi = [0i64; 3];
        assert_eq!(mccool_kernel_character(k, chi.as_mut_ptr()), MccoolStatus::Ok);
        assert_eq!(chi, [6, 0, 0]);
        let mut b = ptr::null_mut();
        assert_eq!(mccool_kernel_basis_element(k, 5, &mut b), MccoolStatus::Ok);
        let mut vanishes = false;
        mccool_tau_vanishes(b, &mut vanishes);
        assert!(vanishes);
        mccool_polynomial_free(b);
        assert_eq!(mccool_kernel_basis_element(k, 6, &mut b), MccoolStatus::InvalidArgument);
        assert!(!mccool_last_error().is_null());
        let mut json = ptr::null_mut();
        assert_eq!(mccool_kernel_to_json(k, &mut json), MccoolStatus::Ok);
        assert!(take_string(json).contains("\"kernel_dim\":6"));
        mccool_kernel_free(k);
    }
}

#[test]
fn errors() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(mccool_kernel_compute(10, &mut k), MccoolStatus::InvalidArgument);
        let msg = CStr::from_ptr(mccool_last_error()).to_str().unwrap();
        assert!(msg.contains("10"), "{msg}");
        assert_eq!(mccool_kernel_dim(ptr::null(), &mut 0), MccoolStatus::NullPointer);
        assert_eq!(mccool_omega(ptr::null_mut()), MccoolStatus::NullPointer);
        let bad = CString::new("{not json").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(mccool_polynomial_from_json(bad.as_ptr(), &mut p), MccoolStatus::InvalidArgument);
        assert_eq!(mccool_omega(&mut p), MccoolStatus::Ok);
        assert!(mccool_last_error().is_null());
        mccool_polynomial_free(p);
        mccool_polynomial_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(mccool_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/mccool.h")).unwrap();
    for name in
        ["mccool_kernel_compute", "mccool_last_error", "MCCOOL_STATUS_NULL_POINTER", "typedef struct MccoolKernel"]
    {
        assert!(header.contains(name), "{name}");
    }
}
