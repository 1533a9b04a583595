use std::ffi::{CStr, CString};
use std::ptr;

use topoctl_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = topo_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn sierpinski() -> *mut TopoSpace {
    let mut s = ptr::null_mut();
    let opens = [0b00, 0b01, 0b11];
    assert_eq!(unsafe { topo_space_from_opens(2, opens.as_ptr(), 3, &mut s) }, TopoStatus::Ok);
    s
}

fn property(s: *const TopoSpace, id: &str) -> TopoTruth {
    let mut t = TopoTruth::Undecided;
    assert_eq!(unsafe { topo_space_property(s, c(id).as_ptr(), &mut t) }, TopoStatus::Ok);
    t
}

#[test]
fn space_queries() {
    let s = sierpinski();
    unsafe {
        assert_eq!(topo_space_points(s), 2);
        assert_eq!(topo_space_open_count(s), 3);
        let mut closure = 0;
        assert_eq!(topo_space_closure(s, 0b01, &mut closure), TopoStatus::Ok);
        assert_eq!(closure, 0b11);
        assert_eq!(topo_space_closure(s, 0b100, &mut closure), TopoStatus::Topology);
        assert!(last_error().contains("not a subset"));
        assert_eq!(topo_space_closure(s, 0b10, &mut closure), TopoStatus::Ok);
        assert!(topo_last_error().is_null());
        topo_space_free(s);
    }
}

#[test]
fn opens_buffer_protocol() {
    let s = sierpinski();
    let mut written = 0;
    let mut small = [0u64; 2];
    unsafe {
        assert_eq!(topo_space_opens(s, small.as_mut_ptr(), 2, &mut written), TopoStatus::BufferTooSmall);
        assert_eq!(written, 3);
        let mut buf = [0u64; 3];
        assert_eq!(topo_space_opens(s, buf.as_mut_ptr(), 3, &mut written), TopoStatus::Ok);
        assert_eq!(buf, [0b00, 0b01, 0b11]);
        topo_space_free(s);
    }
}

#[test]
fn properties_match_the_kernel() {
    let s = sierpinski();
    assert_eq!(property(s, "T0"), TopoTruth::True);
    assert_eq!(property(s, "T1"), TopoTruth::False);
    assert_eq!(property(s, "US"), TopoTruth::False);
    let mut t = TopoTruth::Undecided;
    let status = unsafe { topo_space_property(s, c("Us").as_ptr(), &mut t) };
    assert_eq!(status, TopoStatus::UnknownProperty);
    assert!(last_error().contains("did you mean US"));
    unsafe { topo_space_free(s) };
}

#[test]
fn invalid_topologies_are_rejected() {
    let mut s = ptr::null_mut();
    let opens = [0b000, 0b001, 0b010, 0b111];
    assert_eq!(unsafe { topo_space_from_opens(3, opens.as_ptr(), 4, &mut s) }, TopoStatus::Topology);
    assert!(s.is_null());
    assert!(last_error().contains("union"));
    assert_eq!(unsafe { topo_space_from_opens(3, ptr::null(), 2, &mut s) }, TopoStatus::NullPointer);
}

#[test]
fn parse_render_round_trip() {
    let mut s = ptr::null_mut();
    let text = c("space s\npoints 3\nsubbasis {0} {0 1} {0 2}\n");
    unsafe {
        assert_eq!(topo_space_parse(text.as_ptr(), &mut s), TopoStatus::Ok);
        assert_eq!(topo_space_open_count(s), 5);
        let mut out = ptr::null_mut();
        assert_eq!(topo_space_render(s, c("d").as_ptr(), &mut out), TopoStatus::Ok);
        let rendered = CStr::from_ptr(out).to_str().unwrap().to_owned();
        topo_string_free(out);
        assert_eq!(rendered, "space d\npoints 3\nopens {} {0} {0 1} {0 2} {0 1 2}\n");
        topo_space_free(s);

        let bad = c("space s\npoints 2\nopens {} {0 9} {0 1}\n");
        assert_eq!(topo_space_parse(bad.as_ptr(), &mut s), TopoStatus::Parse);
        assert!(last_error().starts_with("3:"));
    }
}

#[test]
fn coreflection_is_finer() {
    let mut pair = ptr::null_mut();
    let mut finer = ptr::null_mut();
    let opens = [0b00, 0b11];
    unsafe {
        assert_eq!(topo_space_from_opens(2, opens.as_ptr(), 2, &mut pair), TopoStatus::Ok);
        assert_eq!(topo_space_coreflect(pair, c("P").as_ptr(), &mut finer), TopoStatus::Ok);
        assert_eq!(topo_space_open_count(finer), 2);
        topo_space_free(finer);
        let s = sierpinski();
        assert_eq!(topo_space_coreflect(s, c("P").as_ptr(), &mut finer), TopoStatus::Ok);
        assert_eq!(topo_space_open_count(finer), 4);
        topo_space_free(finer);
        assert_eq!(topo_space_coreflect(s, c("Q").as_ptr(), &mut finer), TopoStatus::UnknownClass);
        topo_space_free(s);
        topo_space_free(pair);
    }
}

#[test]
fn knowledge_base_status() {
    let mut kb = ptr::null_mut();
    unsafe {
        assert_eq!(topo_kb_shipped(&mut kb), TopoStatus::Ok);
        let mut verdict = TopoImplication::Unknown;
        let mut witness = ptr::null_mut();
        let status = topo_kb_status(kb, c("UR").as_ptr(), c("k2H").as_ptr(), &mut verdict, &mut witness);
        assert_eq!((status, verdict), (TopoStatus::Ok, TopoImplication::NotImplies));
        assert_eq!(CStr::from_ptr(witness).to_str().unwrap(), "URnotk2H");
        topo_string_free(witness);

        let status = topo_kb_status(kb, c("T2").as_ptr(), c("T1").as_ptr(), &mut verdict, &mut witness);
        assert_eq!((status, verdict), (TopoStatus::Ok, TopoImplication::Implies));
        assert!(witness.is_null());

        let status = topo_kb_status(kb, c("T2").as_ptr(), c("k3H").as_ptr(), &mut verdict, ptr::null_mut());
        assert_eq!(status, TopoStatus::Kb);
        topo_kb_free(kb);

        assert_eq!(topo_kb_load(c("/nonexistent/kb.json").as_ptr(), &mut kb), TopoStatus::Kb);
    }
}

#[test]
fn null_handles_are_reported() {
    let mut t = TopoTruth::Undecided;
    unsafe {
        assert_eq!(topo_space_points(ptr::null()), 0);
        assert_eq!(topo_space_property(ptr::null(), c("T0").as_ptr(), &mut t), TopoStatus::NullPointer);
        assert_eq!(last_error(), "space is null");
        topo_space_free(ptr::null_mut());
        topo_kb_free(ptr::null_mut());
        topo_string_free(ptr::null_mut());
    }
    let version = unsafe { CStr::from_ptr(topo_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}
