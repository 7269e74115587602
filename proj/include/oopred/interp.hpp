#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "oopred/ir.hpp"
#include "oopred/util.hpp"

namespace oopred {

// ---------------------------------------------------------------------------
// Instrumented execution of mini-IR programs. The trace records every field
// access plus call boundaries, which is all the validator needs.
// ---------------------------------------------------------------------------

struct CallSite {
    std::string method; // caller method id; "-" for the synthetic root
    int index = -1;     // caller instruction index; -1 for the synthetic root

    bool operator==(const CallSite&) const = default;
    auto operator<=>(const CallSite&) const = default;
};

inline const CallSite kRootCallSite{"-", -1};

enum class AccessKind { GetField, PutField };

struct AccessEvent {
    AccessKind kind = AccessKind::GetField;
    std::string class_name;
    std::string field_name;
    std::string value_type;
    std::string method; // method performing the access
    int instr_index = 0;

    bool operator==(const AccessEvent&) const = default;
};

struct EnterEvent {
    std::string method;
    CallSite call_site;

    bool operator==(const EnterEvent&) const = default;
};

struct ExitEvent {
    std::string method;

    bool operator==(const ExitEvent&) const = default;
};

using TraceEvent = std::variant<AccessEvent, EnterEvent, ExitEvent>;

struct Trace {
    std::vector<TraceEvent> events;
    bool truncated = false;

    bool operator==(const Trace&) const = default;
};

struct ExecLimits {
    std::uint64_t max_events = 10'000'000;  // 1e7
    std::uint64_t max_steps = 100'000'000;  // 1e8
};

// ---------------------------------------------------------------------------
// Heap and values
// ---------------------------------------------------------------------------

struct ObjRef {
    std::size_t index = 0;

    bool operator==(const ObjRef&) const = default;
};

struct Unset {
    bool operator==(const Unset&) const = default;
};

struct Null {
    bool operator==(const Null&) const = default;
};

using Value = std::variant<Unset, std::int64_t, ObjRef, Null>;

struct HeapObject {
    std::string class_name;
    std::map<std::string, Value> fields;
};

namespace detail {

class Interpreter {
public:
    Interpreter(const Program& p, const ExecLimits& limits) : program_(p), limits_(limits) {}

    Trace run() {
        const MethodDef* entry = program_.find_method(program_.entry);
        if (!entry) throw InputError("entry method " + program_.entry + " not found");
        emit(EnterEvent{entry->id(), kRootCallSite});
        if (!halted_) call(*entry, {});
        trace_.truncated = halted_;
        return std::move(trace_);
    }

private:
    struct Frame {
        const MethodDef* method;
        std::vector<Value> regs;
    };

    void emit(TraceEvent event) {
        if (halted_) return;
        if (trace_.events.size() >= limits_.max_events) {
            halted_ = true;
            return;
        }
        trace_.events.push_back(std::move(event));
    }

    [[noreturn]] void fault(const Frame& f, int pc, const std::string& msg) {
        throw RuntimeFault(f.method->id(), pc, msg);
    }

    std::int64_t as_int(const Frame& f, int pc, int reg) {
        const Value& v = read(f, pc, reg);
        if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
        fault(f, pc, "register r" + std::to_string(reg) + " does not hold an integer");
    }

    const Value& read(const Frame& f, int pc, int reg) {
        const Value& v = f.regs[static_cast<std::size_t>(reg)];
        if (std::holds_alternative<Unset>(v))
            fault(f, pc, "read of uninitialized register r" + std::to_string(reg));
        return v;
    }

    HeapObject& deref(const Frame& f, int pc, int reg) {
        const Value& v = read(f, pc, reg);
        if (std::holds_alternative<Null>(v)) fault(f, pc, "null dereference");
        const auto* ref = std::get_if<ObjRef>(&v);
        if (!ref)
            fault(f, pc, "register r" + std::to_string(reg) + " does not hold an object reference");
        return heap_[ref->index];
    }

    // Returns the callee's return value, or Unset for a void return.
    Value call(const MethodDef& m, std::vector<Value> args) {
        Frame frame{&m, std::vector<Value>(static_cast<std::size_t>(m.register_count))};
        for (std::size_t i = 0; i < args.size(); ++i) frame.regs[i] = std::move(args[i]);

        int pc = 0;
        const int n = static_cast<int>(m.instructions.size());
        while (pc < n && !halted_) {
            if (++steps_ > limits_.max_steps) {
                halted_ = true;
                break;
            }
            const Instruction& ins = m.instructions[static_cast<std::size_t>(pc)];
            switch (ins.op) {
                case Opcode::Const:
                    frame.regs[static_cast<std::size_t>(ins.dst)] =
                        static_cast<std::int64_t>(ins.value);
                    break;
                case Opcode::New: {
                    HeapObject obj;
                    obj.class_name = ins.class_name;
                    const ClassDef* cls = program_.find_class(ins.class_name);
                    for (const auto& fld : cls->fields) {
                        if (fld.declared_type == "int")
                            obj.fields[fld.name] = static_cast<std::int64_t>(0);
                        else
                            obj.fields[fld.name] = Null{};
                    }
                    heap_.push_back(std::move(obj));
                    frame.regs[static_cast<std::size_t>(ins.dst)] = ObjRef{heap_.size() - 1};
                    break;
                }
                case Opcode::GetField: {
                    HeapObject& obj = deref(frame, pc, ins.a);
                    auto it = obj.fields.find(ins.field_name);
                    if (it == obj.fields.end())
                        fault(frame, pc, "object of class " + obj.class_name + " has no field " +
                                             ins.field_name);
                    emit(AccessEvent{AccessKind::GetField, ins.class_name, ins.field_name,
                                     to_oo_access(program_, ins).value_type, m.id(), pc});
                    if (halted_) break;
                    frame.regs[static_cast<std::size_t>(ins.dst)] = it->second;
                    break;
                }
                case Opcode::PutField: {
                    HeapObject& obj = deref(frame, pc, ins.a);
                    auto it = obj.fields.find(ins.field_name);
                    if (it == obj.fields.end())
                        fault(frame, pc, "object of class " + obj.class_name + " has no field " +
                                             ins.field_name);
                    const Value& v = read(frame, pc, ins.b);
                    emit(AccessEvent{AccessKind::PutField, ins.class_name, ins.field_name,
                                     to_oo_access(program_, ins).value_type, m.id(), pc});
                    if (halted_) break;
                    it->second = v;
                    break;
                }
                case Opcode::Add:
                    frame.regs[static_cast<std::size_t>(ins.dst)] =
                        as_int(frame, pc, ins.a) + as_int(frame, pc, ins.b);
                    break;
                case Opcode::Sub:
                    frame.regs[static_cast<std::size_t>(ins.dst)] =
                        as_int(frame, pc, ins.a) - as_int(frame, pc, ins.b);
                    break;
                case Opcode::IfLt:
                    if (as_int(frame, pc, ins.a) < as_int(frame, pc, ins.b)) {
                        pc = m.labels.at(ins.label);
                        continue;
                    }
                    break;
                case Opcode::Goto:
                    pc = m.labels.at(ins.label);
                    continue;
                case Opcode::Call: {
                    const MethodDef* callee = program_.find_method(ins.callee);
                    std::vector<Value> callee_args;
                    callee_args.reserve(ins.args.size());
                    for (int r : ins.args) callee_args.push_back(read(frame, pc, r));
                    emit(EnterEvent{callee->id(), CallSite{m.id(), pc}});
                    if (halted_) break;
                    Value result = call(*callee, std::move(callee_args));
                    if (halted_) break;
                    if (ins.dst >= 0) {
                        if (std::holds_alternative<Unset>(result))
                            fault(frame, pc, "call to " + ins.callee + " returned no value");
                        frame.regs[static_cast<std::size_t>(ins.dst)] = result;
                    }
                    break;
                }
                case Opcode::Return: {
                    Value result = ins.dst >= 0 ? read(frame, pc, ins.dst) : Value{Unset{}};
                    emit(ExitEvent{m.id()});
                    return result;
                }
            }
            ++pc;
        }
        if (!halted_) emit(ExitEvent{m.id()}); // implicit void return at end of body
        return Unset{};
    }

    const Program& program_;
    const ExecLimits& limits_;
    std::vector<HeapObject> heap_;
    Trace trace_;
    std::uint64_t steps_ = 0;
    bool halted_ = false;
};

} // namespace detail

// Deterministic instrumented execution. Halts cleanly with truncated=true if
// either limit fires; throws RuntimeFault on null dereference, uninitialized
// register reads and similar faults.
inline Trace execute(const Program& p, const ExecLimits& limits = {}) {
    if (limits.max_events == 0 || limits.max_steps == 0)
        throw InputError("execution limits must be positive");
    return detail::Interpreter(p, limits).run();
}

// ---------------------------------------------------------------------------
// Trace files. Line-oriented, tab-separated:
//   A<TAB>getfield|putfield<TAB>class<TAB>field<TAB>type<TAB>method<TAB>index
//   E<TAB>method<TAB>caller_method<TAB>caller_index
//   X<TAB>method
// plus a final "#truncated" line when a limit fired.
// ---------------------------------------------------------------------------

inline std::string write_trace(const Trace& trace) {
    std::string out;
    for (const auto& event : trace.events) {
        if (const auto* a = std::get_if<AccessEvent>(&event)) {
            out += "A\t";
            out += a->kind == AccessKind::GetField ? "getfield" : "putfield";
            out += "\t" + a->class_name + "\t" + a->field_name + "\t" + a->value_type + "\t" +
                   a->method + "\t" + std::to_string(a->instr_index) + "\n";
        } else if (const auto* e = std::get_if<EnterEvent>(&event)) {
            out += "E\t" + e->method + "\t" + e->call_site.method + "\t" +
                   std::to_string(e->call_site.index) + "\n";
        } else {
            out += "X\t" + std::get<ExitEvent>(event).method + "\n";
        }
    }
    if (trace.truncated) out += "#truncated\n";
    return out;
}

inline Trace read_trace(std::string_view text) {
    Trace trace;
    int lineno = 0;
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (const auto& line : lines) {
        ++lineno;
        if (line == "#truncated") {
            if (lineno != static_cast<int>(lines.size()))
                throw ParseError(lineno, 1, "#truncated must be the final line");
            trace.truncated = true;
            continue;
        }
        if (line.empty()) throw ParseError(lineno, 1, "empty trace line");
        auto cols = split(line, '\t');
        if (cols[0] == "A") {
            if (cols.size() != 7)
                throw ParseError(lineno, 1, "access line must have 7 fields, got " +
                                                std::to_string(cols.size()));
            AccessEvent a;
            if (cols[1] == "getfield")
                a.kind = AccessKind::GetField;
            else if (cols[1] == "putfield")
                a.kind = AccessKind::PutField;
            else
                throw ParseError(lineno, 1, "unknown access kind '" + cols[1] + "'");
            a.class_name = cols[2];
            a.field_name = cols[3];
            a.value_type = cols[4];
            a.method = cols[5];
            try {
                a.instr_index = std::stoi(cols[6]);
            } catch (const std::exception&) {
                throw ParseError(lineno, 1, "bad instruction index '" + cols[6] + "'");
            }
            trace.events.emplace_back(std::move(a));
        } else if (cols[0] == "E") {
            if (cols.size() != 4)
                throw ParseError(lineno, 1, "enter line must have 4 fields, got " +
                                                std::to_string(cols.size()));
            EnterEvent e;
            e.method = cols[1];
            e.call_site.method = cols[2];
            try {
                e.call_site.index = std::stoi(cols[3]);
            } catch (const std::exception&) {
                throw ParseError(lineno, 1, "bad call site index '" + cols[3] + "'");
            }
            trace.events.emplace_back(std::move(e));
        } else if (cols[0] == "X") {
            if (cols.size() != 2)
                throw ParseError(lineno, 1, "exit line must have 2 fields, got " +
                                                std::to_string(cols.size()));
            trace.events.emplace_back(ExitEvent{cols[1]});
        } else {
            throw ParseError(lineno, 1, "unknown trace record '" + cols[0] + "'");
        }
    }
    return trace;
}

} // namespace oopred
