#pragma once

#include <json.hpp>
#include <string>

#include <hyplat/coxeter.hpp>
#include <hyplat/coxgroup.hpp>
#include <hyplat/lorentz.hpp>
#include <hyplat/signature.hpp>

namespace hyplat::cli {

using nlohmann::json;

std::string read_file(const std::string& path);
/// FNV-1a 64-bit content digest, hex encoded.
std::string digest(const std::string& content);

json to_json(const SignatureTriple& s);
json to_json(const MQField::Ptr& f);
json gram_to_json(const FMatrix& m);
json to_json(const OrderResult& o);
json vector_to_json(const FMatrix& columns, std::size_t col);

std::string signature_text(const SignatureTriple& s);

}  // namespace hyplat::cli
