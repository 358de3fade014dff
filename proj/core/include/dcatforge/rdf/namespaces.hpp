#pragma once

#include <string>
#include <string_view>

namespace dcatforge::ns {

inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view dct = "http://purl.org/dc/terms/";
inline constexpr std::string_view dcat = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view foaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view vcard = "http://www.w3.org/2006/vcard/ns#";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view dc = "http://purl.org/dc/elements/1.1/";

inline std::string iri(std::string_view base, std::string_view local) {
    std::string out;
    out.reserve(base.size() + local.size());
    out.append(base).append(local);
    return out;
}

inline const std::string rdf_type = iri(rdf, "type");
inline const std::string xsd_datetime = iri(xsd, "dateTime");
inline const std::string dcat_dataset_class = iri(dcat, "Dataset");
inline const std::string dcat_distribution_class = iri(dcat, "Distribution");

} // namespace dcatforge::ns
