#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "pubnet/affinity.hpp"
#include "pubnet/collab.hpp"
#include "pubnet/network.hpp"
#include "pubnet/roles.hpp"
#include "pubnet/topics.hpp"

namespace pubnet {

void write_graphml(const Network& net, std::ostream& out);
void write_dot(const Network& net, std::ostream& out);
void write_edge_csv(const Network& net, std::ostream& out);  // u,v,weight

// Residual table in the supplementary layout: source rows, target columns,
// areas in size order, zeros on the diagonal.
void write_association_csv(const AssociationMatrix& matrix, std::ostream& out);
// Long form (source,target,actual,expected,residual) for heat-map rendering.
void write_heatmap_csv(const AssociationMatrix& matrix, std::ostream& out);

void write_roles_csv(const std::map<std::string, NodeRoleProfile>& profiles, std::ostream& out);
void write_distortion_csv(const DistortionReport& report, std::ostream& out);
std::string distortion_summary(const DistortionReport& report);

void write_rir_csv(const std::vector<RirSeries>& series, std::ostream& out);
void write_areas_tsv(const TopicAreas& areas, std::ostream& out);
std::string label_metadata_text(const TopicAreas& areas,
                                const std::map<int, LabelMetadata>& metadata);

void write_propensity_csv(const PropensityTable& table, std::ostream& out);

}  // namespace pubnet
