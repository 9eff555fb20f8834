#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splc/source.hpp"

namespace splc {

class AstNode;

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t {
    Program,
    TypeSynonymDecl,
    ProcDecl,
    Param,
    VarDecl,
    // type expressions
    NamedType,
    IntType,
    ArrayType,
    // statements
    Assign,
    Call,
    Compound,
    If,
    While,
    Skip,
    // terms
    Identifier,
    ArrayAccess,
    IntegerLiteral,
    Binary,
    Comparison,
    Negative,
};

inline constexpr std::size_t kNodeKindCount = 20;

std::string_view to_string(NodeKind kind);

// A node's position relative to its parent. Inherited attribute equations
// attach to (parent kind, child role) pairs.
enum class ChildRole : std::uint8_t {
    Root,
    ProgramDecl,
    PredefinedDecl, // children injected by the predefined-declarations NTA
    SynonymType,
    ProcParam,
    ProcVar,
    ProcBody,
    ParamType,
    VarType,
    ArrayBase,
    AssignLhs,
    AssignRhs,
    CallArg,
    CompoundStmt,
    IfCond,
    IfThen,
    IfElse,
    WhileCond,
    WhileBody,
    AccessTarget,
    AccessIndex,
    BinaryLhs,
    BinaryRhs,
    NegativeOperand,
};

enum class ParamMode : std::uint8_t { Ref, Val };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div };
enum class ComparisonOp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(ParamMode mode);
std::string_view to_string(BinaryOp op);
std::string_view to_string(ComparisonOp op);

struct ProgramData {
    std::vector<AstNode*> decls;
};
struct TypeSynonymDeclData {
    std::string name;
    SourceSpan name_span;
    AstNode* type_expr = nullptr;
};
struct ProcDeclData {
    std::string name;
    SourceSpan name_span;
    std::vector<AstNode*> params;
    std::vector<AstNode*> vars;
    AstNode* body = nullptr;
};
struct ParamData {
    ParamMode mode = ParamMode::Val;
    std::string name;
    SourceSpan name_span;
    AstNode* type_expr = nullptr;
};
struct VarDeclData {
    std::string name;
    SourceSpan name_span;
    AstNode* type_expr = nullptr;
};
struct NamedTypeData {
    std::string name;
};
struct IntTypeData {};
struct ArrayTypeData {
    std::int64_t length = 0;
    AstNode* base = nullptr;
};
struct AssignData {
    AstNode* lhs = nullptr;
    AstNode* rhs = nullptr;
};
struct CallData {
    std::string callee;
    SourceSpan callee_span;
    std::vector<AstNode*> args;
};
struct CompoundData {
    std::vector<AstNode*> stmts;
};
struct IfData {
    AstNode* cond = nullptr;
    AstNode* then_branch = nullptr;
    AstNode* else_branch = nullptr;
};
struct WhileData {
    AstNode* cond = nullptr;
    AstNode* body = nullptr;
};
struct SkipData {};
struct IdentifierData {
    std::string name;
};
struct ArrayAccessData {
    AstNode* target = nullptr;
    AstNode* index = nullptr;
};
struct IntegerLiteralData {
    std::int64_t value = 0;
};
struct BinaryData {
    BinaryOp op = BinaryOp::Add;
    AstNode* lhs = nullptr;
    AstNode* rhs = nullptr;
};
struct ComparisonData {
    ComparisonOp op = ComparisonOp::Eq;
    AstNode* lhs = nullptr;
    AstNode* rhs = nullptr;
};
struct NegativeData {
    AstNode* operand = nullptr;
};

// Alternative order must match NodeKind so kind() is the variant index.
using NodePayload = std::variant<
    ProgramData, TypeSynonymDeclData, ProcDeclData, ParamData, VarDeclData,
    NamedTypeData, IntTypeData, ArrayTypeData,
    AssignData, CallData, CompoundData, IfData, WhileData, SkipData,
    IdentifierData, ArrayAccessData, IntegerLiteralData, BinaryData,
    ComparisonData, NegativeData>;

// One AST node. Structure (payload, span, id) is fixed at construction;
// the parent link is wired once when the parent adopts the node.
class AstNode {
public:
    AstNode(NodeId id, SourceSpan span, NodePayload data)
        : id_(id), span_(span), data_(std::move(data)) {}

    AstNode(const AstNode&) = delete;
    AstNode& operator=(const AstNode&) = delete;

    NodeId id() const { return id_; }
    NodeKind kind() const { return static_cast<NodeKind>(data_.index()); }
    const SourceSpan& span() const { return span_; }
    const AstNode* parent() const { return parent_; }
    ChildRole role() const { return role_; }

    template <class Data> bool is() const { return std::holds_alternative<Data>(data_); }
    template <class Data> const Data& as() const { return std::get<Data>(data_); }

    const NodePayload& payload() const { return data_; }

    // The name this node declares or references; empty for unnamed kinds.
    std::string_view name() const;

private:
    friend class Ast;

    NodeId id_;
    SourceSpan span_;
    const AstNode* parent_ = nullptr;
    ChildRole role_ = ChildRole::Root;
    NodePayload data_;
};

inline bool is_declaration(NodeKind k) {
    return k == NodeKind::TypeSynonymDecl || k == NodeKind::ProcDecl ||
           k == NodeKind::Param || k == NodeKind::VarDecl;
}
inline bool is_type_expr(NodeKind k) {
    return k == NodeKind::NamedType || k == NodeKind::IntType || k == NodeKind::ArrayType;
}
inline bool is_statement(NodeKind k) {
    return k >= NodeKind::Assign && k <= NodeKind::Skip;
}
inline bool is_term(NodeKind k) {
    return k >= NodeKind::Identifier && k <= NodeKind::Negative;
}

// Children in syntactic order, paired with their roles.
std::vector<const AstNode*> children(const AstNode& node);
void for_each_child(const AstNode& node,
                    const std::function<void(const AstNode&, ChildRole)>& fn);

// Owns every node of one compilation, including subtrees created later by
// non-terminal attributes. Node ids are assigned in creation order.
class Ast {
public:
    Ast() = default;
    Ast(Ast&&) = default;
    Ast& operator=(Ast&&) = default;

    template <class Data>
    AstNode& create(SourceSpan span, Data&& data) {
        auto node = std::make_unique<AstNode>(
            static_cast<NodeId>(nodes_.size()), span,
            NodePayload(std::forward<Data>(data)));
        nodes_.push_back(std::move(node));
        return *nodes_.back();
    }

    // Wires the parent link of `child`. Each node is adopted exactly once.
    void adopt(const AstNode& parent, AstNode& child, ChildRole role);

    void set_root(AstNode& root) { root_ = &root; }
    const AstNode& root() const { return *root_; }
    AstNode& node(NodeId id) { return *nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }

private:
    std::vector<std::unique_ptr<AstNode>> nodes_;
    AstNode* root_ = nullptr;
};

} // namespace splc
