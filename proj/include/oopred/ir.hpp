#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oopred/util.hpp"

namespace oopred {

// ---------------------------------------------------------------------------
// The mini-IR: a small register-based object-oriented language. Programs are
// a flat list of class and method definitions plus one entry method. The
// textual form (.mir) is line-oriented; see docs/mir-grammar.md.
// ---------------------------------------------------------------------------

struct FieldDecl {
    std::string name;
    std::string declared_type; // "int" or a declared class name

    bool operator==(const FieldDecl&) const = default;
};

struct ClassDef {
    std::string name;
    std::vector<FieldDecl> fields;

    const FieldDecl* find_field(std::string_view field) const {
        for (const auto& f : fields)
            if (f.name == field) return &f;
        return nullptr;
    }

    bool operator==(const ClassDef&) const = default;
};

enum class Opcode { Const, New, GetField, PutField, Add, Sub, IfLt, Goto, Call, Return };

struct Instruction {
    Opcode op;
    int dst = -1;             // Const/New/GetField/Add/Sub; Call and Return use -1 for "none"
    int a = -1;               // Add/Sub/IfLt lhs; GetField/PutField object register
    int b = -1;               // Add/Sub/IfLt rhs; PutField source register
    long long value = 0;      // Const
    std::string class_name;   // New/GetField/PutField
    std::string field_name;   // GetField/PutField
    std::string label;        // IfLt/Goto target
    std::string callee;       // Call target method id
    std::vector<int> args;    // Call argument registers

    bool is_branch() const { return op == Opcode::IfLt || op == Opcode::Goto || op == Opcode::Return; }
    bool is_access() const { return op == Opcode::GetField || op == Opcode::PutField; }

    bool operator==(const Instruction&) const = default;
};

struct MethodDef {
    std::string owner;
    std::string name;
    int param_count = 0;
    int register_count = 1;
    std::vector<Instruction> instructions;
    std::map<std::string, int> labels; // label name -> instruction index

    std::string id() const { return owner + "." + name; }

    bool operator==(const MethodDef&) const = default;
};

struct Program {
    std::vector<ClassDef> classes;
    std::vector<MethodDef> methods;
    std::string entry; // method id

    const ClassDef* find_class(std::string_view name) const {
        for (const auto& c : classes)
            if (c.name == name) return &c;
        return nullptr;
    }

    const MethodDef* find_method(std::string_view id) const {
        for (const auto& m : methods)
            if (m.id() == id) return &m;
        return nullptr;
    }

    bool operator==(const Program&) const = default;
};

// A single field read or write as the prediction model sees it.
struct OOAccess {
    std::string class_name;
    std::string field_name;
    std::string value_type; // declared type of (class_name, field_name)

    bool operator==(const OOAccess&) const = default;
    auto operator<=>(const OOAccess&) const = default;
};

inline OOAccess to_oo_access(const Program& p, const Instruction& ins) {
    const ClassDef* cls = p.find_class(ins.class_name);
    const FieldDecl* fld = cls ? cls->find_field(ins.field_name) : nullptr;
    if (!fld) throw InputError("unresolved field " + ins.class_name + "." + ins.field_name);
    return OOAccess{ins.class_name, ins.field_name, fld->declared_type};
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

enum class TokKind { Ident, Int, Punct, Newline, End };

struct Token {
    TokKind kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blanks();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = TokKind::End;
            return t;
        }
        char c = src_[pos_];
        if (c == '\n') {
            advance();
            t.kind = TokKind::Newline;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.kind = TokKind::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t start = pos_;
            if (c == '-') advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
            t.kind = TokKind::Int;
            t.text = std::string(src_.substr(start, pos_ - start));
            auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
            if (res.ec != std::errc()) throw ParseError(t.line, t.col, "integer out of range");
            return t;
        }
        if (std::string_view("{}(),.:=").find(c) != std::string_view::npos) {
            advance();
            t.kind = TokKind::Punct;
            t.text = std::string(1, c);
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blanks() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class ProgramParser {
public:
    explicit ProgramParser(std::string_view src) : lex_(src) { bump(); }

    Program parse() {
        Program p;
        bool have_entry = false;
        skip_newlines();
        while (cur_.kind != TokKind::End) {
            if (is_ident("class")) {
                p.classes.push_back(parse_class());
            } else if (is_ident("method")) {
                p.methods.push_back(parse_method());
            } else if (is_ident("entry")) {
                if (have_entry) throw ParseError(cur_.line, cur_.col, "duplicate entry declaration");
                bump();
                p.entry = parse_method_id();
                have_entry = true;
                expect_line_end();
            } else {
                throw ParseError(cur_.line, cur_.col,
                                 "expected 'class', 'method' or 'entry', got '" + cur_.text + "'");
            }
            skip_newlines();
        }
        if (!have_entry) throw ParseError(cur_.line, cur_.col, "missing entry declaration");
        return p;
    }

private:
    void bump() { cur_ = lex_.next(); }

    bool is_ident(std::string_view s) const { return cur_.kind == TokKind::Ident && cur_.text == s; }
    bool is_punct(char c) const { return cur_.kind == TokKind::Punct && cur_.text[0] == c; }

    void expect_punct(char c) {
        if (!is_punct(c))
            throw ParseError(cur_.line, cur_.col,
                             std::string("expected '") + c + "', got '" + describe() + "'");
        bump();
    }

    std::string expect_ident() {
        if (cur_.kind != TokKind::Ident)
            throw ParseError(cur_.line, cur_.col, "expected identifier, got '" + describe() + "'");
        std::string s = cur_.text;
        bump();
        return s;
    }

    long long expect_int() {
        if (cur_.kind != TokKind::Int)
            throw ParseError(cur_.line, cur_.col, "expected integer, got '" + describe() + "'");
        long long v = cur_.value;
        bump();
        return v;
    }

    void expect_line_end() {
        if (cur_.kind == TokKind::End) return;
        if (cur_.kind != TokKind::Newline)
            throw ParseError(cur_.line, cur_.col, "expected end of line, got '" + describe() + "'");
        bump();
    }

    void skip_newlines() {
        while (cur_.kind == TokKind::Newline) bump();
    }

    std::string describe() const {
        switch (cur_.kind) {
            case TokKind::Newline: return "end of line";
            case TokKind::End: return "end of input";
            default: return cur_.text;
        }
    }

    std::string parse_method_id() {
        std::string owner = expect_ident();
        expect_punct('.');
        return owner + "." + expect_ident();
    }

    // Register token: identifier of the form r<digits>.
    std::optional<int> as_register(const Token& t) const {
        if (t.kind != TokKind::Ident || t.text.size() < 2 || t.text[0] != 'r') return std::nullopt;
        for (std::size_t i = 1; i < t.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return std::nullopt;
        return std::stoi(t.text.substr(1));
    }

    int expect_register() {
        auto r = as_register(cur_);
        if (!r)
            throw ParseError(cur_.line, cur_.col, "expected register, got '" + describe() + "'");
        bump();
        return *r;
    }

    ClassDef parse_class() {
        bump(); // 'class'
        ClassDef c;
        c.name = expect_ident();
        expect_punct('{');
        if (is_punct('}')) { // one-line empty class
            bump();
            expect_line_end();
            return c;
        }
        expect_line_end();
        skip_newlines();
        while (!is_punct('}')) {
            FieldDecl f;
            f.name = expect_ident();
            expect_punct(':');
            f.declared_type = expect_ident();
            expect_line_end();
            skip_newlines();
            c.fields.push_back(std::move(f));
        }
        bump(); // '}'
        expect_line_end();
        return c;
    }

    MethodDef parse_method() {
        bump(); // 'method'
        MethodDef m;
        m.owner = expect_ident();
        expect_punct('.');
        m.name = expect_ident();
        if (!is_ident("params"))
            throw ParseError(cur_.line, cur_.col, "expected 'params', got '" + describe() + "'");
        bump();
        m.param_count = static_cast<int>(expect_int());
        if (!is_ident("regs"))
            throw ParseError(cur_.line, cur_.col, "expected 'regs', got '" + describe() + "'");
        bump();
        m.register_count = static_cast<int>(expect_int());
        expect_punct('{');
        if (is_punct('}')) { // one-line empty body
            bump();
            expect_line_end();
            return m;
        }
        expect_line_end();
        skip_newlines();
        while (!is_punct('}')) {
            parse_body_line(m);
            skip_newlines();
        }
        bump(); // '}'
        expect_line_end();
        for (const auto& [label, index] : m.labels) {
            if (index >= static_cast<int>(m.instructions.size()))
                throw ParseError(cur_.line, cur_.col,
                                 "label '" + label + "' is not followed by an instruction");
        }
        return m;
    }

    void parse_body_line(MethodDef& m) {
        // Label line: IDENT ':'
        if (cur_.kind == TokKind::Ident && !as_register(cur_)) {
            Token save = cur_;
            // Peek for ':' by checking the label forms; only a bare "IDENT :" line is a label.
            std::string ident = cur_.text;
            bump();
            if (is_punct(':')) {
                bump();
                int idx = static_cast<int>(m.instructions.size());
                if (m.labels.count(ident))
                    throw ParseError(save.line, save.col, "duplicate label '" + ident + "'");
                m.labels[ident] = idx;
                expect_line_end();
                return;
            }
            parse_instruction(m, save, ident);
            return;
        }
        // Register destination: rN = <op> ...
        if (auto r = as_register(cur_)) {
            Token save = cur_;
            bump();
            expect_punct('=');
            std::string opname = expect_ident();
            Instruction ins;
            ins.dst = *r;
            if (opname == "const") {
                ins.op = Opcode::Const;
                ins.value = expect_int();
            } else if (opname == "new") {
                ins.op = Opcode::New;
                ins.class_name = expect_ident();
            } else if (opname == "getfield") {
                ins.op = Opcode::GetField;
                ins.a = expect_register();
                expect_punct(',');
                ins.class_name = expect_ident();
                expect_punct('.');
                ins.field_name = expect_ident();
            } else if (opname == "add" || opname == "sub") {
                ins.op = opname == "add" ? Opcode::Add : Opcode::Sub;
                ins.a = expect_register();
                expect_punct(',');
                ins.b = expect_register();
            } else if (opname == "call") {
                ins.op = Opcode::Call;
                parse_call_tail(ins);
            } else {
                throw ParseError(save.line, save.col, "unknown instruction '" + opname + "'");
            }
            expect_line_end();
            m.instructions.push_back(std::move(ins));
            return;
        }
        throw ParseError(cur_.line, cur_.col, "expected instruction or label, got '" + describe() + "'");
    }

    // Instructions that do not start with a destination register.
    void parse_instruction(MethodDef& m, const Token& at, const std::string& opname) {
        Instruction ins;
        if (opname == "putfield") {
            ins.op = Opcode::PutField;
            ins.a = expect_register();
            expect_punct(',');
            ins.class_name = expect_ident();
            expect_punct('.');
            ins.field_name = expect_ident();
            expect_punct(',');
            ins.b = expect_register();
        } else if (opname == "if_lt") {
            ins.op = Opcode::IfLt;
            ins.a = expect_register();
            expect_punct(',');
            ins.b = expect_register();
            expect_punct(',');
            ins.label = expect_ident();
        } else if (opname == "goto") {
            ins.op = Opcode::Goto;
            ins.label = expect_ident();
        } else if (opname == "call") {
            ins.op = Opcode::Call;
            parse_call_tail(ins);
        } else if (opname == "return") {
            ins.op = Opcode::Return;
            if (auto r = as_register(cur_)) {
                ins.dst = *r;
                bump();
            }
        } else {
            throw ParseError(at.line, at.col, "unknown instruction '" + opname + "'");
        }
        expect_line_end();
        m.instructions.push_back(std::move(ins));
    }

    void parse_call_tail(Instruction& ins) {
        ins.callee = parse_method_id();
        expect_punct('(');
        if (!is_punct(')')) {
            ins.args.push_back(expect_register());
            while (is_punct(',')) {
                bump();
                ins.args.push_back(expect_register());
            }
        }
        expect_punct(')');
    }

    Lexer lex_;
    Token cur_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

inline void check_register(const MethodDef& m, int reg, int index, const char* what) {
    if (reg < 0 || reg >= m.register_count)
        throw InputError("in " + m.id() + ": instruction " + std::to_string(index) + ": " + what +
                         " r" + std::to_string(reg) + " out of range (regs " +
                         std::to_string(m.register_count) + ")");
}

// Reachability over the instruction list, prior to CFG construction. Both
// directions are required by the CFG invariants: every instruction must be
// reachable from the method start, and every instruction must have a path
// to a method exit (RETURN or falling off the end).
inline void check_method_flow(const MethodDef& m) {
    const int n = static_cast<int>(m.instructions.size());
    if (n == 0) return;

    auto successors = [&](int i) {
        std::vector<int> out;
        const Instruction& ins = m.instructions[static_cast<std::size_t>(i)];
        if (ins.op == Opcode::Return) return out;
        if (ins.op == Opcode::Goto) {
            out.push_back(m.labels.at(ins.label));
            return out;
        }
        if (i + 1 <= n) out.push_back(i + 1); // n acts as the exit pseudo-index
        if (ins.op == Opcode::IfLt) out.push_back(m.labels.at(ins.label));
        return out;
    };

    std::vector<bool> reached(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> work{0};
    reached[0] = true;
    while (!work.empty()) {
        int i = work.back();
        work.pop_back();
        if (i == n) continue;
        for (int s : successors(i)) {
            if (!reached[static_cast<std::size_t>(s)]) {
                reached[static_cast<std::size_t>(s)] = true;
                work.push_back(s);
            }
        }
        if (m.instructions[static_cast<std::size_t>(i)].op == Opcode::Return) reached[static_cast<std::size_t>(n)] = true;
    }
    for (int i = 0; i < n; ++i) {
        if (!reached[static_cast<std::size_t>(i)])
            throw InputError("in " + m.id() + ": instruction " + std::to_string(i) + " is unreachable");
    }

    // Backward pass: which instructions can reach an exit.
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i)
        for (int s : successors(i)) preds[static_cast<std::size_t>(s)].push_back(i);
    std::vector<bool> exits(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> back;
    exits[static_cast<std::size_t>(n)] = true;
    back.push_back(n);
    for (int i = 0; i < n; ++i) {
        if (m.instructions[static_cast<std::size_t>(i)].op == Opcode::Return) {
            exits[static_cast<std::size_t>(i)] = true;
            back.push_back(i);
        }
    }
    while (!back.empty()) {
        int i = back.back();
        back.pop_back();
        for (int p : preds[static_cast<std::size_t>(i)]) {
            if (!exits[static_cast<std::size_t>(p)]) {
                exits[static_cast<std::size_t>(p)] = true;
                back.push_back(p);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!exits[static_cast<std::size_t>(i)])
            throw InputError("in " + m.id() + ": instruction " + std::to_string(i) +
                             " has no path to a method exit");
    }
}

} // namespace detail

// Checks all Program invariants; throws InputError naming the offender.
inline void validate_program(const Program& p) {
    std::set<std::string> class_names;
    for (const auto& c : p.classes) {
        if (!class_names.insert(c.name).second)
            throw InputError("duplicate class " + c.name);
        std::set<std::string> field_names;
        for (const auto& f : c.fields) {
            if (!field_names.insert(f.name).second)
                throw InputError("duplicate field " + c.name + "." + f.name);
        }
    }
    for (const auto& c : p.classes) {
        for (const auto& f : c.fields) {
            if (f.declared_type != "int" && !class_names.count(f.declared_type))
                throw InputError("field " + c.name + "." + f.name + " has unresolved type " +
                                 f.declared_type);
        }
    }

    std::set<std::string> method_ids;
    for (const auto& m : p.methods) {
        if (!method_ids.insert(m.id()).second)
            throw InputError("duplicate method " + m.id());
        if (!class_names.count(m.owner))
            throw InputError("method " + m.id() + " has unresolved owner class " + m.owner);
    }

    for (const auto& m : p.methods) {
        if (m.register_count < 1)
            throw InputError("method " + m.id() + " must have at least one register");
        if (m.param_count < 0 || m.param_count > m.register_count)
            throw InputError("method " + m.id() + " declares more params than registers");
        for (const auto& [label, index] : m.labels) {
            if (index < 0 || index >= static_cast<int>(m.instructions.size()))
                throw InputError("in " + m.id() + ": label " + label + " out of range");
        }
        for (std::size_t i = 0; i < m.instructions.size(); ++i) {
            const Instruction& ins = m.instructions[i];
            const int idx = static_cast<int>(i);
            switch (ins.op) {
                case Opcode::Const:
                    detail::check_register(m, ins.dst, idx, "destination");
                    break;
                case Opcode::New:
                    detail::check_register(m, ins.dst, idx, "destination");
                    if (!class_names.count(ins.class_name))
                        throw InputError("in " + m.id() + ": unresolved class " + ins.class_name);
                    break;
                case Opcode::GetField:
                case Opcode::PutField: {
                    if (ins.op == Opcode::GetField)
                        detail::check_register(m, ins.dst, idx, "destination");
                    else
                        detail::check_register(m, ins.b, idx, "source");
                    detail::check_register(m, ins.a, idx, "object register");
                    const ClassDef* cls = p.find_class(ins.class_name);
                    if (!cls || !cls->find_field(ins.field_name))
                        throw InputError("in " + m.id() + ": unresolved field " + ins.class_name +
                                         "." + ins.field_name);
                    break;
                }
                case Opcode::Add:
                case Opcode::Sub:
                    detail::check_register(m, ins.dst, idx, "destination");
                    detail::check_register(m, ins.a, idx, "operand");
                    detail::check_register(m, ins.b, idx, "operand");
                    break;
                case Opcode::IfLt:
                    detail::check_register(m, ins.a, idx, "operand");
                    detail::check_register(m, ins.b, idx, "operand");
                    if (!m.labels.count(ins.label))
                        throw InputError("in " + m.id() + ": unresolved label " + ins.label);
                    break;
                case Opcode::Goto:
                    if (!m.labels.count(ins.label))
                        throw InputError("in " + m.id() + ": unresolved label " + ins.label);
                    break;
                case Opcode::Call: {
                    const MethodDef* callee = p.find_method(ins.callee);
                    if (!callee)
                        throw InputError("in " + m.id() + ": unresolved method " + ins.callee);
                    if (static_cast<int>(ins.args.size()) != callee->param_count)
                        throw InputError("in " + m.id() + ": call to " + ins.callee + " passes " +
                                         std::to_string(ins.args.size()) + " args, expected " +
                                         std::to_string(callee->param_count));
                    if (ins.dst >= 0) detail::check_register(m, ins.dst, idx, "destination");
                    for (int r : ins.args) detail::check_register(m, r, idx, "argument");
                    break;
                }
                case Opcode::Return:
                    if (ins.dst >= 0) detail::check_register(m, ins.dst, idx, "return value");
                    break;
            }
        }
        detail::check_method_flow(m);
    }

    const MethodDef* entry = p.find_method(p.entry);
    if (!entry) throw InputError("entry method " + p.entry + " not found");
    if (entry->param_count != 0)
        throw InputError("entry method " + p.entry + " must take no parameters");
}

inline Program parse_program(std::string_view source) {
    Program p = detail::ProgramParser(source).parse();
    validate_program(p);
    return p;
}

// ---------------------------------------------------------------------------
// Serialization (canonical form; parse(serialize(p)) == p)
// ---------------------------------------------------------------------------

namespace detail {

inline void serialize_instruction(std::string& out, const Instruction& ins) {
    auto reg = [](int r) { return "r" + std::to_string(r); };
    switch (ins.op) {
        case Opcode::Const:
            out += "  " + reg(ins.dst) + " = const " + std::to_string(ins.value);
            break;
        case Opcode::New:
            out += "  " + reg(ins.dst) + " = new " + ins.class_name;
            break;
        case Opcode::GetField:
            out += "  " + reg(ins.dst) + " = getfield " + reg(ins.a) + ", " + ins.class_name + "." +
                   ins.field_name;
            break;
        case Opcode::PutField:
            out += "  putfield " + reg(ins.a) + ", " + ins.class_name + "." + ins.field_name + ", " +
                   reg(ins.b);
            break;
        case Opcode::Add:
            out += "  " + reg(ins.dst) + " = add " + reg(ins.a) + ", " + reg(ins.b);
            break;
        case Opcode::Sub:
            out += "  " + reg(ins.dst) + " = sub " + reg(ins.a) + ", " + reg(ins.b);
            break;
        case Opcode::IfLt:
            out += "  if_lt " + reg(ins.a) + ", " + reg(ins.b) + ", " + ins.label;
            break;
        case Opcode::Goto:
            out += "  goto " + ins.label;
            break;
        case Opcode::Call: {
            out += "  ";
            if (ins.dst >= 0) out += reg(ins.dst) + " = ";
            out += "call " + ins.callee + "(";
            for (std::size_t i = 0; i < ins.args.size(); ++i) {
                if (i) out += ", ";
                out += reg(ins.args[i]);
            }
            out += ")";
            break;
        }
        case Opcode::Return:
            out += "  return";
            if (ins.dst >= 0) out += " " + reg(ins.dst);
            break;
    }
    out += "\n";
}

} // namespace detail

inline std::string serialize_program(const Program& p) {
    std::string out;
    for (const auto& c : p.classes) {
        if (c.fields.empty()) {
            out += "class " + c.name + " { }\n\n";
            continue;
        }
        out += "class " + c.name + " {\n";
        for (const auto& f : c.fields) out += "  " + f.name + ": " + f.declared_type + "\n";
        out += "}\n\n";
    }
    for (const auto& m : p.methods) {
        out += "method " + m.id() + " params " + std::to_string(m.param_count) + " regs " +
               std::to_string(m.register_count);
        if (m.instructions.empty()) {
            out += " { }\n\n";
            continue;
        }
        out += " {\n";
        // Labels are emitted immediately before their target instruction.
        std::map<int, std::vector<std::string>> labels_at;
        for (const auto& [label, index] : m.labels) labels_at[index].push_back(label);
        for (auto& [index, names] : labels_at) std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < m.instructions.size(); ++i) {
            auto it = labels_at.find(static_cast<int>(i));
            if (it != labels_at.end())
                for (const auto& name : it->second) out += name + ":\n";
            detail::serialize_instruction(out, m.instructions[i]);
        }
        out += "}\n\n";
    }
    out += "entry " + p.entry + "\n";
    return out;
}

} // namespace oopred
