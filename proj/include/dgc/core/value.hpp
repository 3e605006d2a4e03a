#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace dgc {

/// Identifier of an instance node or a link in a design graph. Ids are
/// allocated from one monotonically increasing counter and never reused
/// within a graph's lifetime.
using InstanceId = std::int64_t;
using LinkId = std::int64_t;

/// Reference to an instance node. `id == 0` is the explicit null reference.
struct Ref {
    InstanceId id = 0;

    bool isNull() const { return id == 0; }
    friend bool operator==(const Ref& a, const Ref& b) { return a.id == b.id; }
    friend bool operator!=(const Ref& a, const Ref& b) { return !(a == b); }
};

/// Runtime value of an attribute, variable or expression.
/// `std::monostate` stands for void (absence of a value).
struct Value {
    using Storage = std::variant<std::monostate, std::int64_t, double, bool,
                                 std::string, Ref, std::vector<Value>>;
    Storage v;

    Value() = default;
    Value(std::int64_t i) : v(i) {}
    Value(double d) : v(d) {}
    Value(bool b) : v(b) {}
    Value(std::string s) : v(std::move(s)) {}
    Value(Ref r) : v(r) {}
    Value(std::vector<Value> xs) : v(std::move(xs)) {}

    bool isVoid() const { return std::holds_alternative<std::monostate>(v); }
    bool isInt() const { return std::holds_alternative<std::int64_t>(v); }
    bool isReal() const { return std::holds_alternative<double>(v); }
    bool isBool() const { return std::holds_alternative<bool>(v); }
    bool isString() const { return std::holds_alternative<std::string>(v); }
    bool isRef() const { return std::holds_alternative<Ref>(v); }
    bool isList() const { return std::holds_alternative<std::vector<Value>>(v); }

    std::int64_t asInt() const { return std::get<std::int64_t>(v); }
    double asReal() const { return std::get<double>(v); }
    bool asBool() const { return std::get<bool>(v); }
    const std::string& asString() const { return std::get<std::string>(v); }
    Ref asRef() const { return std::get<Ref>(v); }
    const std::vector<Value>& asList() const { return std::get<std::vector<Value>>(v); }

    /// Numeric read with int -> real widening.
    double asNumber() const { return isInt() ? static_cast<double>(asInt()) : asReal(); }

    friend bool operator==(const Value& a, const Value& b) { return a.v == b.v; }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
};

/// Static type of an expression or declaration.
struct Type {
    enum class K { Void, Int, Real, Bool, String, Instance, List };

    K kind = K::Void;
    std::string name;               // class or interface name when kind == Instance
    std::vector<Type> elem;         // element type when kind == List (0 or 1 entries)

    static Type voidType() { return {}; }
    static Type intType() { return {K::Int, {}, {}}; }
    static Type realType() { return {K::Real, {}, {}}; }
    static Type boolType() { return {K::Bool, {}, {}}; }
    static Type stringType() { return {K::String, {}, {}}; }
    static Type instance(std::string className) { return {K::Instance, std::move(className), {}}; }
    static Type list(Type e) { return {K::List, {}, {std::move(e)}}; }

    bool isVoid() const { return kind == K::Void; }
    bool isNumeric() const { return kind == K::Int || kind == K::Real; }
    bool isInstance() const { return kind == K::Instance; }

    friend bool operator==(const Type& a, const Type& b) {
        return a.kind == b.kind && a.name == b.name && a.elem == b.elem;
    }
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

    std::string str() const {
        switch (kind) {
            case K::Void: return "void";
            case K::Int: return "int";
            case K::Real: return "real";
            case K::Bool: return "bool";
            case K::String: return "string";
            case K::Instance: return name;
            case K::List: return "list<" + (elem.empty() ? std::string("?") : elem.front().str()) + ">";
        }
        return "?";
    }
};

} // namespace dgc
