#include <sstream>

#include <gtest/gtest.h>

#include "radbound/io.hpp"

using namespace radbound;

TEST(Io, DocumentFieldOrder)
{
    const Json doc = make_document(Json::object(), Json::object(), Json::object());
    std::vector<std::string> keys;
    for (const auto& [k, _] : doc.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"inputs", "results", "diagnostics", "version"}));
    EXPECT_EQ(doc["version"], kVersion);
}

TEST(Io, FamilySpecRoundTrip)
{
    const FamilySpec spec = normalized({"yukawa", {{"g", 9.085}}});
    const Json j = Json::parse(to_json(spec).dump());
    const FamilySpec back = family_spec_from_json(j);
    EXPECT_EQ(back.family, spec.family);
    EXPECT_EQ(back.params, spec.params);
    EXPECT_EQ(back.units, spec.units);
}

TEST(Io, NonFiniteBecomesNull)
{
    EXPECT_TRUE(number(std::nan("")).is_null());
    EXPECT_DOUBLE_EQ(number(0.25).get<double>(), 0.25);
}

TEST(Io, ScanCsvSchema)
{
    std::ostringstream os;
    write_csv(os, scan_s({4.0, 5.0}, {1, 2}), "s");
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,N,s");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 4);

    std::ostringstream empty;
    write_csv(empty, scan_s({}, {1}), "s");
    EXPECT_EQ(empty.str(), "n,N,s\n");
}

TEST(Io, CsvQuoting)
{
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    EXPECT_EQ(csv_number(0.1234567890123), "0.123456789");
}

TEST(Io, ComparisonCsvWideLayout)
{
    TableComparison t;
    t.id = "4";
    for (double g : {1.0, 2.0}) {
        ComparisonRow r;
        r.inputs = {{"g", g}};
        r.cells = {compare("exact", g, g, 1e-3, true), compare("main_upper", 1.0, 2.0, 1e-3, true)};
        t.rows.push_back(r);
    }
    std::ostringstream os;
    write_csv(os, t);
    std::istringstream in(os.str());
    std::string head;
    std::getline(in, head);
    EXPECT_EQ(head, "g,exact_computed,exact_ref,main_upper_computed,main_upper_ref,pass");
    EXPECT_FALSE(t.pass());
    EXPECT_EQ(t.failures(), 2);
}

TEST(Io, StateJsonCarriesUnits)
{
    const Potential p = make_potential({"wood-saxon", {{"A", 10.0}}});
    const Json j = to_json(solve_state(p, 0, 0), p);
    EXPECT_EQ(j["energy_unit"], "MeV");
    EXPECT_EQ(j["length_unit"], "fm");
    EXPECT_EQ(j["nodes"], 0);
}
