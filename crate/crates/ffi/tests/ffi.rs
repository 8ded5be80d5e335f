use std::ffi::{CStr, CString};
use std::ptr;

use matchfield_ffi::*;

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { mf_string_free(s) };
    v
}

fn last_error() -> String {
    let p = mf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn diagonal_round_trip_and_check() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(mf_field_diagonal(3, 6, &mut f), MfStatus::Ok);
        assert_eq!((mf_field_k(f), mf_field_n(f)), (3, 6));
        assert!(mf_last_error().is_null());

        let mut s = ptr::null_mut();
        assert_eq!(mf_field_to_json(f, &mut s), MfStatus::Ok);
        let json = CString::new(take(s).to_string()).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(mf_field_from_json(json.as_ptr(), &mut g), MfStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        mf_field_to_json(f, &mut a);
        mf_field_to_json(g, &mut b);
        assert_eq!(take(a), take(b));

        let mut coherent = false;
        assert_eq!(mf_field_is_coherent(f, &mut coherent), MfStatus::Ok);
        assert!(coherent);

        let mut s = ptr::null_mut();
        assert_eq!(mf_field_check_json(f, 3, &mut s), MfStatus::Ok);
        let report = take(s);
        assert_eq!(report["verdict"], "ToricDegeneration (Theorem 1.3)");
        assert_eq!(report["hexagonal"], false);

        let mut s = ptr::null_mut();
        assert_eq!(mf_field_ideal_json(f, 2, &mut s), MfStatus::Ok);
        assert_eq!(take(s)["degrees"]["2"]["count"], 35);

        mf_field_free(f);
        mf_field_free(g);
    }
}

#[test]
fn polytope_of_block_field() {
    unsafe {
        let parts = [2usize, 4];
        let mut f = ptr::null_mut();
        assert_eq!(mf_field_block_diagonal(parts.as_ptr(), 2, &mut f), MfStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(mf_field_polytope_json(f, &mut s), MfStatus::Ok);
        let p = take(s);
        assert_eq!(p["normalized_volume"], "42");
        assert_eq!(p["f_vector"], serde_json::json!([20, 122, 376, 690, 807, 615, 302, 91, 15]));
        mf_field_free(f);
    }
}

#[test]
fn weights_and_ties() {
    unsafe {
        let hex: [i64; 18] = [0, 0, 0, 0, 0, 0, 6, 1, 5, 9, 2, 7, 5, 8, 2, 7, 3, 1];
        let mut w = ptr::null_mut();
        assert_eq!(mf_weights_from_rows(hex.as_ptr(), 3, 6, &mut w), MfStatus::Ok);
        let mut f = ptr::null_mut();
        assert_eq!(mf_weights_induce(w, &mut f), MfStatus::Ok);
        let mut s = ptr::null_mut();
        mf_field_check_json(f, 3, &mut s);
        assert_eq!(take(s)["verdict"], "NotToric (Theorem 1.1)");
        mf_field_free(f);
        mf_weights_free(w);

        let json = CString::new(r#"{"rows": [[0,0,0],[6,4,2],[4,6,2]]}"#).unwrap();
        let mut w = ptr::null_mut();
        assert_eq!(mf_weights_from_json(json.as_ptr(), &mut w), MfStatus::Ok);
        let mut f = ptr::null_mut();
        assert_eq!(mf_weights_induce(w, &mut f), MfStatus::Incoherent);
        assert!(f.is_null());
        assert!(last_error().contains("{1,2,3}"), "{}", last_error());
        mf_weights_free(w);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(mf_field_diagonal(4, 3, &mut f), MfStatus::InvalidArgument);
        assert!(!last_error().is_empty());

        let bad = CString::new("{not json").unwrap();
        assert_eq!(mf_field_from_json(bad.as_ptr(), &mut f), MfStatus::Parse);
        assert_eq!(mf_field_from_json(ptr::null(), &mut f), MfStatus::NullPointer);
        assert_eq!(mf_field_diagonal(3, 6, ptr::null_mut()), MfStatus::NullPointer);

        let mut s = ptr::null_mut();
        assert_eq!(mf_field_check_json(ptr::null(), 3, &mut s), MfStatus::NullPointer);
        assert_eq!(last_error(), "field is NULL");

        mf_field_free(ptr::null_mut());
        mf_weights_free(ptr::null_mut());
        mf_string_free(ptr::null_mut());
    }
}
