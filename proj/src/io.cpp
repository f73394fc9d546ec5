#include "kp/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace kp {

namespace {

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

bool parse_i64(const std::string& token, std::int64_t& out) {
    if (token.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size())
        return false;
    out = v;
    return true;
}

bool parse_u64(const std::string& token, std::uint64_t& out) {
    if (token.empty() || token[0] == '-')
        return false;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size())
        return false;
    out = v;
    return true;
}

bool parse_double(const std::string& token, double& out) {
    if (token.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (errno != 0 || end != token.c_str() + token.size())
        return false;
    out = v;
    return true;
}

[[noreturn]] void fail_parse(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

struct MetaValue {
    std::string value;
    int line = 0;
};

} // namespace

std::string correlation_name(Correlation c) {
    switch (c) {
    case Correlation::Uncorrelated:
        return "uncorrelated";
    case Correlation::WeaklyCorrelated:
        return "weak";
    case Correlation::StronglyCorrelated:
        return "strong";
    }
    throw ContractError("unknown correlation enum value");
}

Correlation correlation_from_name(const std::string& name) {
    if (name == "uncorrelated")
        return Correlation::Uncorrelated;
    if (name == "weak")
        return Correlation::WeaklyCorrelated;
    if (name == "strong")
        return Correlation::StronglyCorrelated;
    throw ParseError("unknown correlation '" + name +
                     "' (expected uncorrelated|weak|strong)");
}

void write_instance(const Instance& instance, std::ostream& out) {
    out << instance.size() << ' ' << instance.capacity() << '\n';
    for (const Item& item : instance.items())
        out << item.profit << ' ' << item.weight << '\n';
    if (instance.meta()) {
        const GenMeta& meta = *instance.meta();
        const SpannerParams& p = meta.params;
        out << "# gen=" << meta.generator << '\n';
        out << "# v=" << p.v << '\n';
        out << "# m=" << p.m << '\n';
        out << "# n=" << p.n << '\n';
        out << "# r=" << p.r << '\n';
        out << "# correlation=" << correlation_name(p.correlation) << '\n';
        out << "# ratio=" << format_double(p.capacity_ratio) << '\n';
        out << "# seed=" << p.seed << '\n';
        for (std::size_t k = 0; k < meta.spanner_set.size(); ++k)
            out << "# base" << k << '=' << meta.spanner_set[k].profit << ' '
                << meta.spanner_set[k].weight << '\n';
    }
}

void write_instance(const Instance& instance,
                    const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    write_instance(instance, out);
    if (!out)
        throw Error("write failed for " + path.string());
}

Instance read_instance(std::istream& in, bool allow_trivial) {
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        if (!std::getline(in, out))
            return false;
        ++lineno;
        return true;
    };

    if (!next_line(line))
        throw StructureError("empty input, expected 'n W' header");
    std::int64_t n = 0, capacity = 0;
    {
        std::istringstream header(line);
        std::string a, b, rest;
        header >> a >> b;
        if (header >> rest)
            fail_parse(lineno, "expected exactly 'n W'");
        if (!parse_i64(a, n) || !parse_i64(b, capacity))
            fail_parse(lineno, "expected integer 'n W' header");
        if (n < 1)
            fail_parse(lineno, "n must be >= 1");
        if (capacity < 0)
            fail_parse(lineno, "capacity must be non-negative");
    }

    std::vector<Item> items;
    items.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        if (!next_line(line))
            throw StructureError("expected " + std::to_string(n) +
                                 " item lines, found " + std::to_string(i));
        if (!line.empty() && line[0] == '#')
            throw StructureError("line " + std::to_string(lineno) +
                                 ": comment before all " + std::to_string(n) +
                                 " item lines were read");
        std::istringstream row(line);
        std::string a, b, rest;
        row >> a >> b;
        if (row >> rest)
            fail_parse(lineno, "expected exactly 'p w'");
        Item item;
        if (!parse_i64(a, item.profit) || !parse_i64(b, item.weight))
            fail_parse(lineno, "expected integer 'p w' item line");
        if (item.profit < 1)
            fail_parse(lineno, "profit must be >= 1");
        if (item.weight < 1)
            fail_parse(lineno, "weight must be >= 1");
        items.push_back(item);
    }

    // Only blank lines and '#' comments may follow the items.
    std::map<std::string, MetaValue> meta_kv;
    while (next_line(line)) {
        if (line.empty())
            continue;
        if (line[0] != '#')
            throw StructureError("line " + std::to_string(lineno) +
                                 ": unexpected content after " +
                                 std::to_string(n) + " item lines");
        std::string body = line.substr(1);
        if (!body.empty() && body[0] == ' ')
            body.erase(0, 1);
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            continue; // free-form comment
        meta_kv[body.substr(0, eq)] = {body.substr(eq + 1), lineno};
    }

    std::optional<GenMeta> meta;
    if (meta_kv.count("gen")) {
        GenMeta m;
        m.generator = meta_kv.at("gen").value;
        auto require = [&](const char* key) -> const MetaValue& {
            auto it = meta_kv.find(key);
            if (it == meta_kv.end())
                throw ParseError(std::string("metadata: missing key '") + key +
                                 "'");
            return it->second;
        };
        auto require_i64 = [&](const char* key) {
            const MetaValue& mv = require(key);
            std::int64_t v;
            if (!parse_i64(mv.value, v))
                fail_parse(mv.line, std::string("bad integer for '") + key +
                                        "'");
            return v;
        };
        SpannerParams& p = m.params;
        p.v = static_cast<int>(require_i64("v"));
        p.m = static_cast<int>(require_i64("m"));
        p.n = static_cast<int>(require_i64("n"));
        p.r = require_i64("r");
        {
            const MetaValue& mv = require("correlation");
            p.correlation = correlation_from_name(mv.value);
        }
        {
            const MetaValue& mv = require("ratio");
            if (!parse_double(mv.value, p.capacity_ratio))
                fail_parse(mv.line, "bad ratio value");
        }
        {
            const MetaValue& mv = require("seed");
            if (!parse_u64(mv.value, p.seed))
                fail_parse(mv.line, "bad seed value");
        }
        for (int k = 0;; ++k) {
            auto it = meta_kv.find("base" + std::to_string(k));
            if (it == meta_kv.end())
                break;
            std::istringstream base(it->second.value);
            std::string a, b;
            base >> a >> b;
            Item item;
            if (!parse_i64(a, item.profit) || !parse_i64(b, item.weight))
                fail_parse(it->second.line, "bad base item");
            m.spanner_set.push_back(item);
        }
        meta = std::move(m);
    }

    if (meta && meta->params.n != n)
        throw StructureError("metadata n=" + std::to_string(meta->params.n) +
                             " does not match header n=" + std::to_string(n));

    return Instance(std::move(items), capacity, std::move(meta),
                    allow_trivial);
}

Instance read_instance(const std::filesystem::path& path, bool allow_trivial) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    try {
        return read_instance(in, allow_trivial);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const StructureError& e) {
        throw StructureError(path.string() + ": " + e.what());
    }
}

} // namespace kp
