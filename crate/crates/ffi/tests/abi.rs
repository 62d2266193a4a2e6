use std::ffi::CStr;
use std::ptr;

use johnson_ffi::*;

fn graph(n: u32, m: u32) -> *mut JgGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { jg_graph_new(n, m, &mut g) }, JgStatus::Ok);
    g
}

fn last_error() -> String {
    let p = jg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn collect(list: *mut JgCliqueList) -> Vec<(JgCliqueClass, u64, Vec<u32>)> {
    let n = unsafe { jg_clique_list_len(list) };
    let out = (0..n)
        .map(|i| {
            let mut info = JgCliqueInfo {
                kind: JgCliqueClass::Min,
                size: 0,
                set: ptr::null(),
                set_len: 0,
            };
            assert_eq!(
                unsafe { jg_clique_list_get(list, i, &mut info) },
                JgStatus::Ok
            );
            let set = unsafe { std::slice::from_raw_parts(info.set, info.set_len) }.to_vec();
            (info.kind, info.size, set)
        })
        .collect();
    unsafe { jg_clique_list_free(list) };
    out
}

#[test]
fn counts() {
    let g = graph(5, 3);
    let mut v = 0;
    unsafe {
        assert_eq!(jg_graph_vertex_count(g, &mut v), JgStatus::Ok);
        assert_eq!(v, 10);
        jg_graph_edge_count(g, &mut v);
        assert_eq!(v, 30);
        jg_graph_degree(g, &mut v);
        assert_eq!(v, 6);
        jg_clique_number(g, &mut v);
        assert_eq!(v, 4);
        jg_clique_partition_number(g, &mut v);
        assert_eq!(v, 5);
        jg_graph_free(g);
    }
    let mut b = 0;
    assert_eq!(unsafe { jg_binomial(67, 33, &mut b) }, JgStatus::Ok);
    assert_eq!(unsafe { jg_binomial(68, 34, &mut b) }, JgStatus::Overflow);
    assert!(last_error().contains("overflow"));
}

#[test]
fn invalid_params_and_nulls() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { jg_graph_new(3, 3, &mut g) },
        JgStatus::InvalidParams
    );
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    let mut v = 0;
    assert_eq!(
        unsafe { jg_graph_vertex_count(ptr::null(), &mut v) },
        JgStatus::NullPointer
    );
    let g = graph(4, 2);
    assert_eq!(
        unsafe { jg_graph_vertex_count(g, ptr::null_mut()) },
        JgStatus::NullPointer
    );
    assert_eq!(unsafe { jg_graph_vertex_count(g, &mut v) }, JgStatus::Ok);
    assert!(jg_last_error().is_null());
    unsafe {
        jg_graph_free(g);
        jg_graph_free(ptr::null_mut());
        jg_clique_list_free(ptr::null_mut());
        jg_string_free(ptr::null_mut());
    }
}

#[test]
fn rank_unrank_adjacency() {
    let g = graph(6, 3);
    let mut buf = [0u32; 3];
    for r in 0..20 {
        assert_eq!(
            unsafe { jg_unrank(g, r, buf.as_mut_ptr(), buf.len()) },
            JgStatus::Ok
        );
        let mut back = 0;
        assert_eq!(
            unsafe { jg_rank(g, buf.as_ptr(), 3, &mut back) },
            JgStatus::Ok
        );
        assert_eq!(back, r);
    }
    assert_eq!(
        unsafe { jg_unrank(g, 20, buf.as_mut_ptr(), 3) },
        JgStatus::Range
    );
    assert_eq!(
        unsafe { jg_unrank(g, 0, buf.as_mut_ptr(), 2) },
        JgStatus::BufferTooSmall
    );
    let (u, v, w) = ([1u32, 2, 3], [1u32, 2, 4], [4u32, 5, 6]);
    let mut adj = false;
    unsafe {
        assert_eq!(
            jg_are_adjacent(g, u.as_ptr(), 3, v.as_ptr(), 3, &mut adj),
            JgStatus::Ok
        );
        assert!(adj);
        jg_are_adjacent(g, u.as_ptr(), 3, w.as_ptr(), 3, &mut adj);
        assert!(!adj);
        let bad = [1u32, 1, 2];
        assert_eq!(jg_rank(g, bad.as_ptr(), 3, &mut 0), JgStatus::InvalidLabel);
        let outside = [1u32, 2, 7];
        assert_ne!(jg_rank(g, outside.as_ptr(), 3, &mut 0), JgStatus::Ok);
        jg_graph_free(g);
    }
}

#[test]
fn clique_lists() {
    let g = graph(5, 3);
    let mut list = ptr::null_mut();
    assert_eq!(
        unsafe { jg_cliques(g, JgFamily::Min, &mut list) },
        JgStatus::Ok
    );
    let min = collect(list);
    assert_eq!(min.len(), 5);
    assert!(min
        .iter()
        .all(|(k, s, set)| *k == JgCliqueClass::Min && *s == 4 && set.len() == 4));
    assert_eq!(min[0].2, vec![1, 2, 3, 4]);
    unsafe { jg_cliques(g, JgFamily::All, &mut list) };
    assert_eq!(collect(list).len(), 15);
    unsafe { jg_partition(g, &mut list) };
    assert_eq!(collect(list).len(), 5);

    // Two members of a max clique: {1,2} plus 3 and 4.
    let members = [1u32, 2, 3, 1, 2, 4];
    assert_eq!(
        unsafe { jg_extend(g, members.as_ptr(), 2, &mut list) },
        JgStatus::Ok
    );
    let ext = collect(list);
    assert_eq!(ext.len(), 2);
    assert!(ext.contains(&(JgCliqueClass::Min, 4, vec![1, 2, 3, 4])));
    assert!(ext.contains(&(JgCliqueClass::Max, 3, vec![1, 2])));

    let apart = [1u32, 2, 3, 3, 4, 5];
    assert_eq!(
        unsafe { jg_extend(g, apart.as_ptr(), 2, &mut list) },
        JgStatus::NotAClique
    );
    let mut info = JgCliqueInfo {
        kind: JgCliqueClass::Min,
        size: 0,
        set: ptr::null(),
        set_len: 0,
    };
    unsafe {
        jg_cliques(g, JgFamily::Min, &mut list);
        assert_eq!(jg_clique_list_get(list, 5, &mut info), JgStatus::Range);
        jg_clique_list_free(list);
        jg_graph_free(g);
    }
}

#[test]
fn degenerate_regime() {
    let g = graph(4, 3);
    let mut deg = false;
    let mut list = ptr::null_mut();
    let mut cp = 0;
    unsafe {
        jg_graph_is_degenerate(g, &mut deg);
        assert!(deg);
        assert_eq!(jg_cliques(g, JgFamily::Max, &mut list), JgStatus::Regime);
        assert_eq!(jg_cliques(g, JgFamily::All, &mut list), JgStatus::Ok);
        assert_eq!(
            collect(list),
            vec![(JgCliqueClass::Min, 4, vec![1, 2, 3, 4])]
        );
        jg_clique_partition_number(g, &mut cp);
        assert_eq!(cp, 1);
        jg_graph_free(g);
    }
}

#[test]
fn verify_report() {
    let g = graph(6, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { jg_verify_json(g, 0, &mut s) }, JgStatus::Ok);
    let json = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { jg_string_free(s) };
    assert!(json.starts_with(r#"{"n":6,"m":3,"#), "{json}");
    assert!(json.contains(r#""failures":[]"#));
    assert_eq!(
        unsafe { jg_verify_json(g, 5, &mut s) },
        JgStatus::CapExceeded
    );
    unsafe { jg_graph_free(g) };
}

#[test]
fn header_declares_api() {
    let header = include_str!("../include/johnson.h");
    for name in [
        "typedef struct JgGraph JgGraph;",
        "typedef struct JgCliqueList JgCliqueList;",
        "JG_STATUS_OK = 0",
        "JG_STATUS_PANIC = 12",
        "jg_graph_new(uint32_t n, uint32_t m, struct JgGraph **out)",
        "jg_cliques(",
        "jg_extend(",
        "jg_verify_json(",
        "jg_string_free(",
        "jg_last_error(void)",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
