#include "hookforge.h"

#include <cstring>
#include <new>
#include <string>

#include "hookforge/errors.hpp"
#include "hookforge/io.hpp"
#include "hookforge/report.hpp"
#include "hookforge/verify.hpp"

struct hf_object {
    hookforge::AnyObject inner;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hf_status record_error(hf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// one funnel for all exception-to-status mapping
template <typename Fn>
hf_status guarded(Fn&& fn) {
    try {
        fn();
        return HF_OK;
    } catch (const hookforge::ParseError& e) {
        return record_error(HF_ERR_PARSE, e.what());
    } catch (const hookforge::InvalidObjectError& e) {
        return record_error(HF_ERR_INVALID, e.what());
    } catch (const hookforge::PreconditionError& e) {
        return record_error(HF_ERR_PRECONDITION, e.what());
    } catch (const hookforge::LimitError& e) {
        return record_error(HF_ERR_LIMIT, e.what());
    } catch (const std::exception& e) {
        return record_error(HF_ERR_INTERNAL, e.what());
    } catch (...) {
        return record_error(HF_ERR_INTERNAL, "unknown error");
    }
}

hf_status parse_into(const char* text, hf_object** out,
                     hookforge::AnyObject (*parser)(const std::string&)) {
    if (!text || !out)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new hf_object{parser(text)}; });
}

hf_status emit(char** json_out, const hookforge::Json& report) {
    *json_out = dup_string(report.dump());
    return *json_out ? HF_OK : record_error(HF_ERR_INTERNAL, "out of memory");
}

} // namespace

extern "C" {

hf_status hf_partition_parse(const char* text, hf_object** out) {
    return parse_into(text, out, hookforge::parse_partition_any);
}
hf_status hf_tree_parse(const char* text, hf_object** out) {
    return parse_into(text, out, hookforge::parse_tree_any);
}
hf_status hf_solid_parse(const char* text, hf_object** out) {
    return parse_into(text, out, hookforge::parse_solid_any);
}
hf_status hf_poset_parse(const char* text, hf_object** out) {
    return parse_into(text, out, hookforge::parse_poset_any);
}
hf_status hf_ideal_parse(const char* text, hf_object** out) {
    return parse_into(text, out, hookforge::parse_ideal_any);
}

void hf_object_free(hf_object* object) { delete object; }

const char* hf_object_type(const hf_object* object) {
    return object ? object->inner.type_name() : "null";
}

long long hf_object_size(const hf_object* object) {
    return object ? object->inner.object_size() : -1;
}

hf_status hf_stats(const hf_object* object, const char* kind, const char* weight,
                   char** json_out) {
    if (!object || !kind || !json_out)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const hookforge::Json report =
            hookforge::stats_report(object->inner, kind, weight ? weight : "");
        if (emit(json_out, report) != HF_OK)
            throw std::bad_alloc();
    });
}

hf_status hf_count(const hf_object* object, char** json_out) {
    if (!object || !json_out)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const hookforge::Json report =
            hookforge::count_report(object->inner, hookforge::le_count_limit());
        if (emit(json_out, report) != HF_OK)
            throw std::bad_alloc();
    });
}

hf_status hf_shuffle(const hf_object* object, const char* subset_json,
                     const char* weight, char** json_out) {
    if (!object || !subset_json || !json_out)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const hookforge::Json report =
            hookforge::shuffle_report(object->inner, subset_json, weight ? weight : "");
        if (emit(json_out, report) != HF_OK)
            throw std::bad_alloc();
    });
}

hf_status hf_bounds(const hf_object* object, char** json_out) {
    if (!object || !json_out)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const hookforge::Json report =
            hookforge::bounds_report(object->inner, hookforge::le_count_limit());
        if (emit(json_out, report) != HF_OK)
            throw std::bad_alloc();
    });
}

hf_status hf_verify(const char* theorem, const hf_sweep_options* options,
                    char** json_out, int* counterexample_found) {
    if (!theorem || !json_out || !counterexample_found)
        return record_error(HF_ERR_ARGUMENT, "null argument");
    *counterexample_found = 0;
    return guarded([&] {
        hookforge::SweepConfig config;
        if (options) {
            if (options->max_n > 0)
                config.max_n = options->max_n;
            if (options->trials > 0)
                config.trials = options->trials;
            config.seed = options->seed;
            config.jobs = options->jobs > 0 ? options->jobs : 1;
        }
        hookforge::Json report;
        bool found = false;
        if (std::string(theorem) == "all") {
            report = hookforge::Json::array();
            for (const hookforge::SweepResult& result : hookforge::run_all(config)) {
                found = found || !result.ok();
                report.push_back(hookforge::verify_report(result, config));
            }
        } else {
            const hookforge::SweepResult result = hookforge::run_theorem(theorem, config);
            found = !result.ok();
            report = hookforge::verify_report(result, config);
        }
        *counterexample_found = found ? 1 : 0;
        if (emit(json_out, report) != HF_OK)
            throw std::bad_alloc();
    });
}

const char* hf_theorem_list(void) {
    static const std::string joined = [] {
        std::string s;
        for (const std::string& id : hookforge::theorem_ids()) {
            if (!s.empty())
                s += ',';
            s += id;
        }
        return s;
    }();
    return joined.c_str();
}

void hf_string_free(char* text) { delete[] text; }

const char* hf_last_error(void) { return g_last_error.c_str(); }

const char* hf_version(void) { return "1.0.0"; }

} // extern "C"
