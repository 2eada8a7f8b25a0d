#include "protoric/protoric.h"

#include "protoric/frontend/commands.hpp"

#include <new>
#include <string_view>

using namespace protoric::frontend;

struct protoric_document {
    LoadedDocument doc;
};

struct protoric_result {
    protoric_status status = PROTORIC_OK;
    std::string out;
    std::string err;
};

namespace {

protoric_status to_status(CommandStatus s)
{
    switch (s) {
    case CommandStatus::Ok: return PROTORIC_OK;
    case CommandStatus::Validation: return PROTORIC_ERR_VALIDATION;
    case CommandStatus::Parse: return PROTORIC_ERR_PARSE;
    case CommandStatus::Usage: return PROTORIC_ERR_USAGE;
    case CommandStatus::Internal: return PROTORIC_ERR_INTERNAL;
    }
    return PROTORIC_ERR_INTERNAL;
}

OutputFormat to_format(protoric_format f)
{
    return f == PROTORIC_FORMAT_JSON ? OutputFormat::Json : OutputFormat::Text;
}

protoric_result* make_result(CommandOutput o)
{
    auto* r = new (std::nothrow) protoric_result;
    if (!r)
        return nullptr;
    r->status = to_status(o.status);
    r->out = std::move(o.out);
    r->err = std::move(o.err);
    return r;
}

protoric_result* usage_result(const char* message)
{
    auto* r = new (std::nothrow) protoric_result;
    if (!r)
        return nullptr;
    r->status = PROTORIC_ERR_USAGE;
    r->err = std::string("protoric: error: ") + message + "\n";
    return r;
}

// Runs a command, converting escaping exceptions into an internal-error result.
template <typename F>
protoric_result* call(F&& f) noexcept
{
    try {
        return make_result(f());
    } catch (const std::exception& e) {
        try {
            CommandOutput o;
            o.status = CommandStatus::Internal;
            o.err = std::string("protoric: error: ") + e.what() + "\n";
            return make_result(std::move(o));
        } catch (...) {
            return nullptr;
        }
    } catch (...) {
        return nullptr;
    }
}

} // namespace

extern "C" {

const char* protoric_version(void)
{
    return "0.1.0";
}

const char* protoric_status_name(protoric_status status)
{
    switch (status) {
    case PROTORIC_OK: return "ok";
    case PROTORIC_ERR_VALIDATION: return "validation";
    case PROTORIC_ERR_PARSE: return "parse";
    case PROTORIC_ERR_USAGE: return "usage";
    case PROTORIC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

int protoric_status_exit_code(protoric_status status)
{
    switch (status) {
    case PROTORIC_OK: return 0;
    case PROTORIC_ERR_VALIDATION: return 1;
    case PROTORIC_ERR_INTERNAL: return 1;
    case PROTORIC_ERR_PARSE: return 2;
    case PROTORIC_ERR_USAGE: return 2;
    }
    return 1;
}

protoric_status protoric_document_parse(const char* source, size_t length, const char* filename,
                                        protoric_format format, protoric_document** out_doc,
                                        protoric_result** out_report)
{
    if (out_doc)
        *out_doc = nullptr;
    if (out_report)
        *out_report = nullptr;
    if (!source || !out_doc)
        return PROTORIC_ERR_USAGE;
    try {
        LoadedDocument doc = load_document(filename ? filename : "<input>", std::string_view(source, length));
        if (!doc.load.tower) {
            CommandOutput o = load_failure(doc, to_format(format));
            const protoric_status s = to_status(o.status);
            if (out_report)
                *out_report = make_result(std::move(o));
            return s;
        }
        *out_doc = new protoric_document{std::move(doc)};
        return PROTORIC_OK;
    } catch (...) {
        return PROTORIC_ERR_INTERNAL;
    }
}

void protoric_document_free(protoric_document* doc)
{
    delete doc;
}

size_t protoric_document_depth(const protoric_document* doc)
{
    return doc ? doc->doc.load.tower->tower.depth() : 0;
}

protoric_result* protoric_document_render(const protoric_document* doc, protoric_format format)
{
    if (!doc)
        return usage_result("no document");
    return call([&] { return run_parse(doc->doc, to_format(format)); });
}

protoric_result* protoric_document_check(const protoric_document* doc, protoric_format format)
{
    if (!doc)
        return usage_result("no document");
    return call([&] { return run_check(doc->doc, to_format(format)); });
}

protoric_result* protoric_document_level(const protoric_document* doc, size_t index, const char* what,
                                         size_t degree, protoric_format format)
{
    if (!doc || !what)
        return usage_result("no document or query");
    return call([&] {
        return run_level(doc->doc, index, what, degree == 0 ? kDefaultIdealDegree : degree, to_format(format));
    });
}

protoric_result* protoric_document_embed(const protoric_document* doc, size_t depth, protoric_format format)
{
    if (!doc)
        return usage_result("no document");
    return call([&] { return run_embed(doc->doc, depth, to_format(format)); });
}

protoric_result* protoric_document_dualize(const protoric_document* doc, protoric_format format)
{
    if (!doc)
        return usage_result("no document");
    return call([&] { return run_dualize(doc->doc, to_format(format)); });
}

protoric_result* protoric_document_point(const protoric_document* doc, size_t level, const char* values,
                                         const char* eval, protoric_format format)
{
    if (!doc || !values)
        return usage_result("no document or values");
    return call([&] {
        std::optional<std::string_view> at;
        if (eval)
            at = eval;
        return run_point(doc->doc, level, values, at, to_format(format));
    });
}

protoric_result* protoric_pair(const char* omega, const char* finsupp, protoric_format format)
{
    if (!omega || !finsupp)
        return usage_result("missing vector");
    return call([&] { return run_pair(omega, finsupp, to_format(format)); });
}

protoric_result* protoric_demo(const char* name, protoric_format format)
{
    if (!name)
        return usage_result("missing demo name");
    return call([&] { return run_demo(name, to_format(format)); });
}

protoric_status protoric_result_status(const protoric_result* result)
{
    return result ? result->status : PROTORIC_ERR_INTERNAL;
}

const char* protoric_result_output(const protoric_result* result)
{
    return result ? result->out.c_str() : "";
}

const char* protoric_result_diagnostics(const protoric_result* result)
{
    return result ? result->err.c_str() : "";
}

void protoric_result_free(protoric_result* result)
{
    delete result;
}

} // extern "C"
