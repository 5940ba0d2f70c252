//! C bindings for the `vfr` engine.
//!
//! Documents are opaque handles created by [`vfr_document_parse`] and
//! released with [`vfr_document_free`]. Every query writes a JSON report
//! through an out pointer; returned strings are owned by the caller and
//! must be released with [`vfr_string_free`]. On any non-`VFR_STATUS_OK`
//! return, [`vfr_last_error_message`] describes the failure for the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vfr::dsl::{self, Document};
use vfr::ethics::classify_operators;
use vfr::model::AgentProfile;
use vfr::planner::{
    find_plans, succ, validate_plan, PlanError, SearchConfig, SearchMode, ValidateError,
};
use vfr::report::{
    ClassifyReport, CompareReport, CoopReport, FilterReport, PlanReport, ValidateReport,
};

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VfrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer,
    /// A string argument was not valid UTF-8.
    InvalidUtf8,
    /// The source text failed to parse; the error message lists every
    /// diagnostic.
    ParseError,
    /// No agent with the given name is declared in the document.
    UnknownAgent,
    /// A step names an operator the document does not declare.
    UnknownOperator,
    /// The goal is not valid for the agent's value filter.
    InvalidGoal,
    /// The step sequence does not replay to a goal-satisfying state.
    InvalidPlan,
    /// An argument combination is unsupported, e.g. filtered search
    /// without an agent.
    InvalidArgument,
    /// An internal failure; the error message has details.
    Internal,
}

/// Which operator pool a search uses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VfrMode {
    Standard = 0,
    Filtered = 1,
}

/// Search parameters for [`vfr_plan_json`] and [`vfr_validate_json`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VfrSearchOptions {
    pub mode: VfrMode,
    /// Drop operators whose cleaning class is violating (filtered mode).
    pub require_cleaning: bool,
    /// Require every rejected proposition to be false in a final state.
    pub strict_goal: bool,
    /// Longest plan considered; 0 selects the default bound.
    pub max_depth: u32,
}

/// An opaque parsed document.
pub struct VfrDocument {
    inner: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(message).expect("nul bytes replaced"));
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn guarded(body: impl FnOnce() -> VfrStatus) -> VfrStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            VfrStatus::Internal
        }
    }
}

/// # Safety
/// `pointer` must be null or a valid, NUL-terminated C string.
unsafe fn required_str<'a>(pointer: *const c_char, what: &str) -> Result<&'a str, VfrStatus> {
    if pointer.is_null() {
        set_error(format!("{what} is null"));
        return Err(VfrStatus::NullPointer);
    }
    CStr::from_ptr(pointer).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        VfrStatus::InvalidUtf8
    })
}

unsafe fn optional_str<'a>(
    pointer: *const c_char,
    what: &str,
) -> Result<Option<&'a str>, VfrStatus> {
    if pointer.is_null() {
        Ok(None)
    } else {
        required_str(pointer, what).map(Some)
    }
}

fn write_string(out: *mut *mut c_char, text: String) -> VfrStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return VfrStatus::NullPointer;
    }
    let text = CString::new(text.replace('\0', " ")).expect("nul bytes replaced");
    unsafe { *out = text.into_raw() };
    VfrStatus::Ok
}

fn deref_document<'a>(handle: *const VfrDocument) -> Result<&'a Document, VfrStatus> {
    if handle.is_null() {
        set_error("document handle is null");
        return Err(VfrStatus::NullPointer);
    }
    Ok(unsafe { &(*handle).inner })
}

fn agent_profile<'a>(doc: &'a Document, name: &str) -> Result<&'a AgentProfile, VfrStatus> {
    doc.profile(name).ok_or_else(|| {
        set_error(format!("unknown agent: {name}"));
        VfrStatus::UnknownAgent
    })
}

fn search_config(options: &VfrSearchOptions, has_agent: bool) -> Result<SearchConfig, VfrStatus> {
    let filtered = matches!(options.mode, VfrMode::Filtered);
    if (filtered || options.strict_goal) && !has_agent {
        set_error("this search needs an agent");
        return Err(VfrStatus::InvalidArgument);
    }
    Ok(SearchConfig {
        mode: if filtered {
            SearchMode::Vfr
        } else {
            SearchMode::Standard
        },
        require_cleaning: options.require_cleaning,
        strict_goal: options.strict_goal,
        max_depth: if options.max_depth == 0 {
            SearchConfig::DEFAULT_MAX_DEPTH
        } else {
            options.max_depth as usize
        },
    })
}

fn split_steps(steps: &str) -> Vec<String> {
    steps
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Parses `source` and stores the document handle in `out_document`.
///
/// # Safety
/// `source` must be a valid C string; `out_document` must be a valid
/// pointer. On success the handle must be released with
/// [`vfr_document_free`].
#[no_mangle]
pub unsafe extern "C" fn vfr_document_parse(
    source: *const c_char,
    out_document: *mut *mut VfrDocument,
) -> VfrStatus {
    guarded(|| {
        let source = match required_str(source, "source") {
            Ok(s) => s,
            Err(status) => return status,
        };
        if out_document.is_null() {
            set_error("output pointer is null");
            return VfrStatus::NullPointer;
        }
        match dsl::parse(source) {
            Ok(inner) => {
                *out_document = Box::into_raw(Box::new(VfrDocument { inner }));
                VfrStatus::Ok
            }
            Err(diagnostics) => {
                let lines: Vec<String> = diagnostics.iter().map(ToString::to_string).collect();
                set_error(lines.join("\n"));
                VfrStatus::ParseError
            }
        }
    })
}

/// Releases a document handle. Null is ignored.
///
/// # Safety
/// `document` must be null or a handle from [`vfr_document_parse`] that
/// has not been freed already.
#[no_mangle]
pub unsafe extern "C" fn vfr_document_free(document: *mut VfrDocument) {
    if !document.is_null() {
        drop(Box::from_raw(document));
    }
}

/// Renders the document back to canonical source text.
///
/// # Safety
/// `document` must be a live handle; `out_source` must be valid. The
/// returned string must be released with [`vfr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vfr_document_render(
    document: *const VfrDocument,
    out_source: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| match deref_document(document) {
        Ok(doc) => write_string(out_source, dsl::render(doc)),
        Err(status) => status,
    })
}

/// Writes the clean base partition for `agent` as JSON.
///
/// # Safety
/// `document` must be a live handle; `agent` must be a valid C string;
/// `out_json` must be valid and the result freed with
/// [`vfr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vfr_filter_json(
    document: *const VfrDocument,
    agent: *const c_char,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let agent = match required_str(agent, "agent") {
            Ok(a) => a,
            Err(status) => return status,
        };
        let profile = match agent_profile(doc, agent) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let report = FilterReport::build(profile, doc.problem().world());
        write_string(out_json, report.to_json())
    })
}

/// Writes the per-operator admissibility and cleaning table as JSON.
///
/// # Safety
/// As for [`vfr_filter_json`].
#[no_mangle]
pub unsafe extern "C" fn vfr_classify_json(
    document: *const VfrDocument,
    agent: *const c_char,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let agent = match required_str(agent, "agent") {
            Ok(a) => a,
            Err(status) => return status,
        };
        let profile = match agent_profile(doc, agent) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let rows = classify_operators(doc.problem(), profile);
        let report = ClassifyReport::build(agent, &rows);
        write_string(out_json, report.to_json())
    })
}

/// Writes the four-way clean base comparison of two agents as JSON.
///
/// # Safety
/// As for [`vfr_filter_json`], with two agent names.
#[no_mangle]
pub unsafe extern "C" fn vfr_compare_json(
    document: *const VfrDocument,
    first: *const c_char,
    second: *const c_char,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let (first, second) = match (
            required_str(first, "first agent"),
            required_str(second, "second agent"),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let a = match agent_profile(doc, first) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let b = match agent_profile(doc, second) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let report = CompareReport::build(a, b, doc.problem().world());
        write_string(out_json, report.to_json())
    })
}

/// Enumerates plans and writes the result as JSON. `agent` may be null
/// for a standard, unfiltered search.
///
/// # Safety
/// `document` must be a live handle; `agent` null or a valid C string;
/// `options` and `out_json` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vfr_plan_json(
    document: *const VfrDocument,
    agent: *const c_char,
    options: *const VfrSearchOptions,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let agent = match optional_str(agent, "agent") {
            Ok(a) => a,
            Err(status) => return status,
        };
        if options.is_null() {
            set_error("options pointer is null");
            return VfrStatus::NullPointer;
        }
        let options = &*options;
        let config = match search_config(options, agent.is_some()) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let profile = match agent {
            Some(name) => match agent_profile(doc, name) {
                Ok(p) => Some(p),
                Err(status) => return status,
            },
            None => None,
        };
        match find_plans(doc.problem(), profile, &config) {
            Ok(plans) => {
                let mode = match options.mode {
                    VfrMode::Standard => "standard",
                    VfrMode::Filtered => "vfr",
                };
                let report = PlanReport::build(mode, agent, &plans);
                write_string(out_json, report.to_json())
            }
            Err(err @ PlanError::InvalidGoal(_)) => {
                set_error(err.to_string());
                VfrStatus::InvalidGoal
            }
            Err(err) => {
                set_error(err.to_string());
                VfrStatus::Internal
            }
        }
    })
}

/// Replays a comma-separated step sequence and writes the verdict as
/// JSON. The report is written even when the plan is invalid; the
/// status then is `VFR_STATUS_INVALID_PLAN`.
///
/// # Safety
/// As for [`vfr_plan_json`], plus `steps` must be a valid C string.
#[no_mangle]
pub unsafe extern "C" fn vfr_validate_json(
    document: *const VfrDocument,
    agent: *const c_char,
    steps: *const c_char,
    options: *const VfrSearchOptions,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let agent = match optional_str(agent, "agent") {
            Ok(a) => a,
            Err(status) => return status,
        };
        let steps = match required_str(steps, "steps") {
            Ok(s) => split_steps(s),
            Err(status) => return status,
        };
        if options.is_null() {
            set_error("options pointer is null");
            return VfrStatus::NullPointer;
        }
        let config = match search_config(&*options, agent.is_some()) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let profile = match agent {
            Some(name) => match agent_profile(doc, name) {
                Ok(p) => Some(p),
                Err(status) => return status,
            },
            None => None,
        };
        let outcome = validate_plan(doc.problem(), &steps, profile, &config);
        match &outcome {
            Err(ValidateError::UnknownOperator { name, .. }) => {
                set_error(format!("unknown operator: {name}"));
                VfrStatus::UnknownOperator
            }
            Err(ValidateError::MissingProfile) => {
                set_error("this search needs an agent");
                VfrStatus::InvalidArgument
            }
            _ => {
                let report = ValidateReport::build(&steps, &outcome);
                let status = write_string(out_json, report.to_json());
                if status != VfrStatus::Ok {
                    return status;
                }
                if let Err(err) = &outcome {
                    set_error(err.to_string());
                    return VfrStatus::InvalidPlan;
                }
                VfrStatus::Ok
            }
        }
    })
}

/// Replays steps and writes the two-agent cooperation verdict as JSON.
///
/// # Safety
/// As for [`vfr_compare_json`], plus `steps` must be a valid C string
/// (it may be empty to check only the initial state).
#[no_mangle]
pub unsafe extern "C" fn vfr_coop_json(
    document: *const VfrDocument,
    first: *const c_char,
    second: *const c_char,
    steps: *const c_char,
    out_json: *mut *mut c_char,
) -> VfrStatus {
    guarded(|| {
        let doc = match deref_document(document) {
            Ok(doc) => doc,
            Err(status) => return status,
        };
        let (first, second) = match (
            required_str(first, "first agent"),
            required_str(second, "second agent"),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let steps = match required_str(steps, "steps") {
            Ok(s) => split_steps(s),
            Err(status) => return status,
        };
        let a = match agent_profile(doc, first) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let b = match agent_profile(doc, second) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let problem = doc.problem();
        let mut state = problem.initial().clone();
        let mut trace = vec![state.clone()];
        for (index, name) in steps.iter().enumerate() {
            let Some(op) = problem.operator(name) else {
                set_error(format!("unknown operator: {name}"));
                return VfrStatus::UnknownOperator;
            };
            match succ(&state, op, problem.world()) {
                Ok(next) => {
                    state = next;
                    trace.push(state.clone());
                }
                Err(err) => {
                    set_error(format!("replay failed at step {}: {err}", index + 1));
                    return VfrStatus::InvalidPlan;
                }
            }
        }
        let report = CoopReport::build(a, b, problem.world(), &steps, &trace);
        write_string(out_json, report.to_json())
    })
}

/// Returns a copy of the calling thread's last error message, or null
/// when the last call succeeded.
///
/// # Safety
/// The returned string must be released with [`vfr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vfr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(message) => message.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `string` must be null or an unreleased string from this library.
#[no_mangle]
pub unsafe extern "C" fn vfr_string_free(string: *mut c_char) {
    if !string.is_null() {
        drop(CString::from_raw(string));
    }
}
