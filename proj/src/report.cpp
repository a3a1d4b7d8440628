#include "loopcoh/report.hpp"

#include <algorithm>
#include <set>

namespace loopcoh {

using nlohmann::json;

OutputFormat parse_format(const std::string& name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

json series_to_json(const PowerSeries& s)
{
    json j;
    j["cutoff"] = s.cutoff();
    j["coefficients"] = s.to_int64();
    return j;
}

PowerSeries series_from_json(const json& j)
{
    PowerSeries s(j.at("cutoff").get<int>());
    auto coeffs = j.at("coefficients").get<std::vector<long long>>();
    for (int i = 0; i <= s.cutoff() && i < static_cast<int>(coeffs.size()); ++i)
        s.coeff(i) = coeffs[static_cast<std::size_t>(i)];
    return s;
}

json module_to_json(const GradedUModule& m)
{
    json j;
    j["free"] = m.free_degrees;
    j["torsion"] = m.torsion_degrees;
    j["cutoff"] = m.cutoff;
    return j;
}

GradedUModule module_from_json(const json& j)
{
    GradedUModule m;
    m.free_degrees = j.at("free").get<std::vector<long long>>();
    m.torsion_degrees = j.at("torsion").get<std::vector<long long>>();
    m.cutoff = j.at("cutoff").get<long long>();
    return m;
}

json page_to_json(const BigradedPage& page)
{
    json j;
    j["page"] = page.page_index;
    j["cutoff"] = page.cutoff;
    json entries = json::array();
    for (const auto& [st, d] : page.dims) {
        json e;
        e["s"] = st.first;
        e["t"] = st.second;
        e["dim"] = d;
        auto it = page.labels.find(st);
        if (it != page.labels.end())
            e["labels"] = it->second;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

BigradedPage page_from_json(const json& j)
{
    BigradedPage page;
    page.page_index = j.at("page").get<int>();
    page.cutoff = j.at("cutoff").get<int>();
    for (const auto& e : j.at("entries")) {
        long long s = e.at("s").get<long long>();
        long long t = e.at("t").get<long long>();
        page.dims[{s, t}] = e.at("dim").get<long long>();
        if (e.contains("labels"))
            page.labels[{s, t}] = e.at("labels").get<std::vector<std::string>>();
    }
    return page;
}

json derived_to_json(const BidegreeHomology& table)
{
    json j;
    j["r"] = table.params.r;
    j["p"] = table.params.p;
    j["alpha"] = table.params.alpha;
    j["max_simplicial"] = table.max_simplicial;
    j["internal_cutoff"] = table.internal_cutoff;
    json cells = json::array();
    for (const auto& c : table.cells) {
        json e;
        e["i"] = c.simplicial;
        e["j"] = c.internal;
        e["dim_bruteforce"] = c.dim_bruteforce;
        e["dim_closed_form"] = c.dim_closed_form;
        e["match"] = c.match;
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    j["all_match"] = table.all_match;
    return j;
}

BidegreeHomology derived_from_json(const json& j)
{
    BidegreeHomology t;
    t.params.r = j.at("r").get<int>();
    t.params.p = j.at("p").get<long long>();
    t.params.alpha = j.at("alpha").get<int>();
    t.max_simplicial = j.at("max_simplicial").get<int>();
    t.internal_cutoff = j.at("internal_cutoff").get<int>();
    t.all_match = j.at("all_match").get<bool>();
    for (const auto& e : j.at("cells")) {
        BidegreeCell c;
        c.simplicial = e.at("i").get<int>();
        c.internal = e.at("j").get<int>();
        c.dim_bruteforce = e.at("dim_bruteforce").get<long long>();
        c.dim_closed_form = e.at("dim_closed_form").get<long long>();
        c.match = e.at("match").get<bool>();
        t.cells.push_back(std::move(c));
    }
    return t;
}

json results_to_json(const std::vector<CheckResult>& results)
{
    json arr = json::array();
    for (const auto& c : results) {
        json e;
        e["check"] = c.name;
        e["r"] = c.r;
        e["p"] = c.p;
        e["pass"] = c.pass;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<CheckResult> results_from_json(const json& j)
{
    std::vector<CheckResult> out;
    for (const auto& e : j) {
        CheckResult c;
        c.name = e.at("check").get<std::string>();
        c.r = e.at("r").get<int>();
        c.p = e.at("p").get<long long>();
        c.pass = e.at("pass").get<bool>();
        if (e.contains("detail"))
            c.detail = e.at("detail").get<std::string>();
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

void write_header(std::ostream& os, const std::string& header)
{
    if (!header.empty())
        os << "# " << header << "\n";
}

}  // namespace

void write_series(std::ostream& os, OutputFormat format, const std::string& header,
                  const std::string& closed_form, const PowerSeries& s)
{
    switch (format) {
    case OutputFormat::text:
        write_header(os, header);
        if (!closed_form.empty())
            os << "# closed form: " << closed_form << "\n";
        os << s.render_coefficients() << "\n";
        break;
    case OutputFormat::csv:
        os << "degree,coefficient\n";
        for (int i = 0; i <= s.cutoff(); ++i)
            os << i << "," << s.coeff(i) << "\n";
        break;
    case OutputFormat::json: {
        json j = series_to_json(s);
        if (!closed_form.empty())
            j["closed_form"] = closed_form;
        if (!header.empty())
            j["header"] = header;
        j["rendered"] = s.render();
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_page(std::ostream& os, OutputFormat format, const std::string& header,
                const BigradedPage& page)
{
    switch (format) {
    case OutputFormat::text: {
        write_header(os, header);
        // grid printer: filtration across, total degree down
        long long s_max = 0;
        for (const auto& [st, d] : page.dims)
            s_max = std::max(s_max, st.first);
        os << "deg\\s";
        for (long long s = 0; s <= s_max; s += 2)
            os << "\t" << s;
        os << "\n";
        for (long long t = 0; t <= page.cutoff; ++t) {
            os << t;
            for (long long s = 0; s <= s_max; s += 2)
                os << "\t" << page.dim(s, t);
            os << "\n";
        }
        break;
    }
    case OutputFormat::csv:
        os << "s,t,dim,labels\n";
        for (const auto& [st, d] : page.dims) {
            os << st.first << "," << st.second << "," << d << ",";
            auto it = page.labels.find(st);
            if (it != page.labels.end()) {
                for (std::size_t k = 0; k < it->second.size(); ++k)
                    os << (k ? " " : "") << it->second[k];
            }
            os << "\n";
        }
        break;
    case OutputFormat::json: {
        json j = page_to_json(page);
        if (!header.empty())
            j["header"] = header;
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_morse_catalog(std::ostream& os, OutputFormat format, const std::string& header,
                         const MorseE1Catalog& catalog)
{
    auto row_type = catalog.equivariant ? "free" : "class";
    switch (format) {
    case OutputFormat::text:
        write_header(os, header);
        os << "class\ttotal degree\tfiltration\ttype\n";
        for (const auto& col : catalog.columns) {
            if (col.free_degrees.empty() && col.plain_degrees.empty()) {
                os << "(none)\t-\t" << col.n << "\t-\n";
                continue;
            }
            for (std::size_t k = 0; k < col.free_degrees.size(); ++k)
                os << col.free_labels[k] << "\t" << col.free_degrees[k] << "\t" << col.n
                   << "\t" << row_type << "\n";
            for (std::size_t k = 0; k < col.plain_degrees.size(); ++k)
                os << col.plain_labels[k] << "\t" << col.plain_degrees[k] << "\t" << col.n
                   << "\t" << (catalog.equivariant ? "torsion" : "class") << "\n";
        }
        break;
    case OutputFormat::csv:
        os << "class,total_degree,filtration,type\n";
        for (const auto& col : catalog.columns) {
            for (std::size_t k = 0; k < col.free_degrees.size(); ++k)
                os << col.free_labels[k] << "," << col.free_degrees[k] << "," << col.n << ","
                   << row_type << "\n";
            for (std::size_t k = 0; k < col.plain_degrees.size(); ++k)
                os << col.plain_labels[k] << "," << col.plain_degrees[k] << "," << col.n
                   << "," << (catalog.equivariant ? "torsion" : "class") << "\n";
        }
        break;
    case OutputFormat::json: {
        json cols = json::array();
        for (const auto& col : catalog.columns) {
            json c;
            c["n"] = col.n;
            c["free_degrees"] = col.free_degrees;
            c["free_labels"] = col.free_labels;
            c["plain_degrees"] = col.plain_degrees;
            c["plain_labels"] = col.plain_labels;
            cols.push_back(std::move(c));
        }
        json j;
        j["r"] = catalog.r;
        j["p"] = catalog.p;
        j["equivariant"] = catalog.equivariant;
        j["twisted"] = catalog.twisted;
        j["cutoff"] = catalog.cutoff;
        j["columns"] = std::move(cols);
        if (!header.empty())
            j["header"] = header;
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_main_basis(std::ostream& os, OutputFormat format, const std::string& header,
                      const GradedUModule& module)
{
    switch (format) {
    case OutputFormat::text:
        write_header(os, header);
        os << "generator\tdegree\ttype\n";
        if (module.free_degrees.empty() && module.torsion_degrees.empty())
            os << "(none)\n";
        for (long long d : module.free_degrees)
            os << "f_" << d << "\t" << d << "\tfree\n";
        for (long long d : module.torsion_degrees)
            os << "t_" << d << "\t" << d << "\ttorsion\n";
        break;
    case OutputFormat::csv:
        os << "generator,degree,type\n";
        for (long long d : module.free_degrees)
            os << "f_" << d << "," << d << ",free\n";
        for (long long d : module.torsion_degrees)
            os << "t_" << d << "," << d << ",torsion\n";
        break;
    case OutputFormat::json: {
        json j = module_to_json(module);
        if (!header.empty())
            j["header"] = header;
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_geodesy_rows(std::ostream& os, OutputFormat format, const std::string& header,
                        const GeodesicBorelPresentation& borel, int degree_cutoff)
{
    const auto& vars = borel.ring.variables();
    struct Row
    {
        int degree;
        long long dim;
        std::string monomials;
    };
    std::vector<Row> rows;
    for (int d = 0; d <= degree_cutoff; ++d) {
        auto basis = borel.ring.degree_basis(d);
        std::string mons;
        for (std::size_t k = 0; k < basis.size(); ++k)
            mons += (k ? " " : "") + monomial_name(basis[k], vars);
        rows.push_back({d, static_cast<long long>(basis.size()),
                        basis.empty() ? "(none)" : mons});
    }
    std::string space = "borel-geodesics[" + borel_case_name(borel.which) + "]";
    switch (format) {
    case OutputFormat::text:
        write_header(os, header);
        os << "space\tr\tp\tn\tdegree\tdim\tbasis\n";
        for (const auto& row : rows)
            os << space << "\t" << borel.r << "\t" << borel.p << "\t" << borel.n << "\t"
               << row.degree << "\t" << row.dim << "\t" << row.monomials << "\n";
        break;
    case OutputFormat::csv:
        os << "space,r,p,n,degree,dim,basis\n";
        for (const auto& row : rows)
            os << space << "," << borel.r << "," << borel.p << "," << borel.n << ","
               << row.degree << "," << row.dim << "," << row.monomials << "\n";
        break;
    case OutputFormat::json: {
        json arr = json::array();
        for (const auto& row : rows) {
            json e;
            e["space"] = space;
            e["r"] = borel.r;
            e["p"] = borel.p;
            e["n"] = borel.n;
            e["degree"] = row.degree;
            e["dim"] = row.dim;
            e["basis"] = row.monomials;
            arr.push_back(std::move(e));
        }
        json j;
        j["rows"] = std::move(arr);
        if (!header.empty())
            j["header"] = header;
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_derived_table(std::ostream& os, OutputFormat format, const std::string& header,
                         const BidegreeHomology& table)
{
    switch (format) {
    case OutputFormat::text:
        write_header(os, header);
        os << "i\tj\tdim_bruteforce\tdim_closed_form\tmatch\n";
        for (const auto& c : table.cells)
            if (c.dim_bruteforce != 0 || c.dim_closed_form != 0 || !c.match)
                os << c.simplicial << "\t" << c.internal << "\t" << c.dim_bruteforce << "\t"
                   << c.dim_closed_form << "\t" << (c.match ? "yes" : "NO") << "\n";
        os << (table.all_match ? "all cells match" : "MISMATCH FOUND") << "\n";
        break;
    case OutputFormat::csv:
        os << "i,j,dim_bruteforce,dim_closed_form,match\n";
        for (const auto& c : table.cells)
            os << c.simplicial << "," << c.internal << "," << c.dim_bruteforce << ","
               << c.dim_closed_form << "," << (c.match ? "yes" : "no") << "\n";
        break;
    case OutputFormat::json: {
        json j = derived_to_json(table);
        if (!header.empty())
            j["header"] = header;
        os << j.dump(2) << "\n";
        break;
    }
    }
}

void write_verify_results(std::ostream& os, OutputFormat format,
                          const std::vector<CheckResult>& results)
{
    switch (format) {
    case OutputFormat::text:
    case OutputFormat::csv:
        for (const auto& c : results) {
            os << (c.pass ? "PASS" : "FAIL") << " " << c.name << " r=" << c.r
               << " p=" << c.p;
            if (!c.detail.empty())
                os << " (" << c.detail << ")";
            os << "\n";
        }
        os << (all_passed(results) ? "ALL CHECKS PASSED" : "FAILURES PRESENT") << "\n";
        break;
    case OutputFormat::json: {
        json j;
        j["results"] = results_to_json(results);
        json failures = json::array();
        for (const auto& c : results)
            if (!c.pass) {
                json f;
                f["check"] = c.name;
                f["r"] = c.r;
                f["p"] = c.p;
                if (!c.detail.empty())
                    f["detail"] = c.detail;
                failures.push_back(std::move(f));
            }
        j["failures"] = std::move(failures);
        j["ok"] = all_passed(results);
        os << j.dump(2) << "\n";
        break;
    }
    }
}

}  // namespace loopcoh
