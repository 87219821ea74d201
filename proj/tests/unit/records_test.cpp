// Copyright 2026 The qkrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkrt/records.hpp"

#include <gtest/gtest.h>

#include "qkrt/error.hpp"

using namespace qkrt;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_runtime_records(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(RuntimeRecords, Table1File) {
  const auto recs = parse_runtime_records(
      "backend,M,S,K,deff,T_seconds\n"
      "ibm_hanoi,100,100,1,6,68\n"
      "ibmq_guadalupe,100,100,1,5,41\n"
      "ibmq_jakarta,100,100,1,4,31\n"
      "ibmq_mumbai,100,100,1,7,97\n"
      "ibmq_toronto,100,100,1,5,48\n");
  ASSERT_EQ(recs.records.size(), 5u);
  EXPECT_TRUE(recs.warnings.empty());
  EXPECT_EQ(recs.records[3].backend, "ibmq_mumbai");
  EXPECT_EQ(recs.records[3].job.d_eff, 7.0);
  EXPECT_EQ(recs.records[4].seconds, 48.0);
}

TEST(RuntimeRecords, ColumnOrderIsFree) {
  const auto recs = parse_runtime_records("T_seconds,deff,K,S,M,backend\n12.5,2,1,400,30,x\n");
  ASSERT_EQ(recs.records.size(), 1u);
  EXPECT_EQ(recs.records[0].job.circuits, 30u);
  EXPECT_EQ(recs.records[0].job.shots, 400u);
}

TEST(RuntimeRecords, EmptyFileWarns) {
  const auto recs = parse_runtime_records("");
  EXPECT_TRUE(recs.records.empty());
  EXPECT_EQ(recs.warnings.size(), 1u);
}

TEST(RuntimeRecords, Errors) {
  EXPECT_EQ(code_of("backend,M,S,K,deff\nx,1,1,1,1\n"), ErrorCode::MalformedCsv);
  try {
    parse_runtime_records("backend,M,S,K,deff,T_seconds\nx,1,1,1,1,3\nx,1,1,1,1,0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedCsv);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of("backend,M,S,K,deff,T_seconds\nx,one,1,1,1,3\n"), ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of("backend,M,S,K,deff,T_seconds\nx,1,1,1,3\n"), ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of("backend,M,S,K,deff,T_seconds\nx,0,1,1,1,3\n"), ErrorCode::MalformedCsv);
}

TEST(Dataset, Parse) {
  const auto data = parse_dataset("x0,x1\n0.5,1.5\n2,3\n");
  ASSERT_EQ(data.size(), 2u);
  EXPECT_EQ(data[1], (FeatureVector{2.0, 3.0}));
  EXPECT_THROW(parse_dataset("x0,x1\n0.5,abc\n"), Error);
}

TEST(Files, MissingFileIsIoError) {
  try {
    read_file("/nonexistent/dir/file.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}
