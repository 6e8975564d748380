// Copyright 2026 The qacr Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include "catch2/catch_amalgamated.hpp"
#include "qacr/io.hpp"
#include "qacr/problems.hpp"

using namespace qacr;

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-2) == "-2");
    CHECK(format_number(1.0 / 3) == "0.3333333333333333");
    CHECK(format_number(20) == "20");
    CHECK(format_number(1e-7) == "1e-07");
    CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
    CHECK(format_number(INFINITY) == "inf");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("QUBO text") {
    auto q = read_qubo_text("# comment\n3 3 1.5\n1 1 -2\n1 3 4  # tail\n3 2 0.5\n");
    CHECK(q.num_variables() == 3);
    CHECK(q.coefficient(0, 0) == -2);
    CHECK(q.coefficient(0, 2) == 4);
    CHECK(q.coefficient(1, 2) == 0.5);
    CHECK(q.offset() == 1.5);
    CHECK(read_qubo_text(write_qubo_text(q)) == q);
    CHECK_THROWS_AS(read_qubo_text("2 1\n1 3 1\n"), InputError);
    CHECK_THROWS_AS(read_qubo_text("2 2\n1 2 1\n"), InputError);
    CHECK_THROWS_AS(read_qubo_text("2 1\n1 2 x\n"), InputError);
    CHECK_THROWS_AS(read_qubo_text(""), InputError);
    auto gka = gka_style_random({});
    CHECK(read_qubo_text(write_qubo_text(gka)) == gka);
}

TEST_CASE("Ising JSON") {
    IsingModel m({{1, 0.25}, {4, -1}}, {{{1, 2}, 3.0}, {{2, 4}, -0.125}}, 2.5, {9});
    AuxRegistry aux{{4, {AuxKind::InteractionSplit, 1, 2, 0, 1, 0}},
                    {9, {AuxKind::IntegerDigit, 0, 0, 3, 2, 8}}};
    auto r = read_ising_json(write_ising_json(m, aux));
    CHECK(r.model == m);
    CHECK(r.aux == aux);
    auto keyed = read_ising_json(R"({"h": {"3": 1.5}, "J": [[3, 5, 2]]})");
    CHECK(keyed.model.linear(3) == 1.5);
    CHECK(keyed.model.quadratic(3, 5) == 2);
    CHECK_THROWS_AS(read_ising_json("{"), InputError);
    CHECK_THROWS_AS(read_ising_json(R"({"J": [[1, 1, 2]]})"), InputError);
    CHECK_THROWS_AS(read_ising_json(R"({"J": [[1, 2]]})"), InputError);
    CHECK_THROWS_AS(read_ising_json(R"({"h": {"x": 1}})"), InputError);
}

TEST_CASE("embedding and hardware JSON") {
    Embedding e{{0, {3, 4}}, {12, {7}}};
    CHECK(read_embedding_json(write_embedding_json(e)) == e);
    CHECK(read_embedding_json(write_embedding_json({})).empty());
    HardwareGraph hw({1, 2, 3}, {{1, 2}, {3, 2}});
    CHECK(read_hardware_json(write_hardware_json(hw)) == hw);
    CHECK_THROWS_AS(read_hardware_json(R"({"nodes": [1], "edges": [[1, 2]]})"), InputError);
    CHECK_THROWS_AS(read_embedding_json("[1]"), InputError);
}

TEST_CASE("samples CSV") {
    SampleSet s({-1, 5, 8});
    s.push_back({{1, -1, 1}, -1.5, 3, false});
    s.push_back({{-1, -1, 1}, 0.1, 1, true});
    const auto text = write_samples_csv(s);
    CHECK(text.rfind("# variables: -1 5 8\nassignment,energy,occurrences,chain_broken\n+-+,-1.5,3,0\n", 0) == 0);
    CHECK(read_samples_csv(text) == s);
    CHECK_THROWS_AS(read_samples_csv("assignment,energy,occurrences,chain_broken\n"), InputError);
    CHECK_THROWS_AS(read_samples_csv("# variables: 1\nassignment,energy,occurrences,chain_broken\n+-,0,1,0\n"),
                    InputError);
    CHECK_THROWS_AS(read_samples_csv("# variables: 1\nassignment,energy,occurrences,chain_broken\n+,0,0,0\n"),
                    InputError);
}

TEST_CASE("files") {
    CHECK_THROWS_AS(read_text_file("/nonexistent/file"), InputError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file", "x"), InputError);
}
