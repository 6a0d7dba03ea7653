#include "covstack/form_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace covstack {

namespace {

std::string trimmed(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

ExpVec parse_exponents(const std::string &token) {
    ExpVec e;
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) throw std::domain_error("empty exponent in term: " + token);
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw std::domain_error("bad exponent '" + item + "'");
        e.push_back(static_cast<unsigned>(v));
    }
    if (e.empty()) throw std::domain_error("term has no exponents");
    return e;
}

} // namespace

Poly parse_poly_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    Poly p;
    bool first = true;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        // exponent list is the last whitespace-separated token; the
        // coefficient may itself contain spaces ("3 mod 7^2")
        std::size_t split = line.find_last_of(" \t");
        if (split == std::string::npos) throw std::domain_error("term needs coefficient and exponents: " + line);
        std::string coeff_str = trimmed(line.substr(0, split));
        std::string exp_str = trimmed(line.substr(split + 1));
        Scalar c = Scalar::parse(coeff_str);
        ExpVec e = parse_exponents(exp_str);
        if (first) {
            p = Poly(static_cast<unsigned>(e.size()), c.field());
            first = false;
        }
        if (e.size() != p.num_vars()) throw std::domain_error("inconsistent variable count across terms");
        p.add_term(e, c);
    }
    if (first) throw std::domain_error("no terms found");
    return p;
}

std::string poly_to_text(const Poly &p) {
    std::ostringstream os;
    for (const auto &[e, c] : p.terms()) {
        os << c.str() << " ";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "\n";
    }
    return os.str();
}

Form parse_form_text(const std::string &text) { return Form(parse_poly_text(text)); }

std::string form_to_text(const Form &f) { return poly_to_text(f.poly()); }

Poly load_poly_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_poly_text(buf.str());
}

Form load_form_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_form_text(buf.str());
}

} // namespace covstack
