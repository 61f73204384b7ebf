#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus (HTML docs + manifest).

The corpus is constructed for the expansion-win experiment: documents about
Anna University's faculty/people never say "teaching" or "staff", while the
staff-training distractors never say "anna", "faculty" or "people", so the
unexpanded query and the expanded queries retrieve disjoint sets.
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "ontosearch" / "data" / "corpus"

# (slug, url, title, description, keywords, body)
DOCS = []

# --- relevant: faculty / people pages for Anna University (12) ---------------
REL = [
    ("r01-cse-people", "http://cs.annauniv.example/people",
     "People and Faculty - Department of Computer Science and Engineering, Anna University",
     "Faculty members and people of the computer science department at anna university.",
     "anna university, faculty, people, computer science",
     "The people of the department of computer science and engineering at anna university "
     "include senior faculty, associate professors and assistant professors. Every faculty "
     "member of the cse department publishes actively. Contact the department office at the "
     "anna university campus in chennai for faculty consultation hours."),
    ("r02-cse-faculty", "http://cs.annauniv.example/faculty",
     "Faculty Members - Computer Science Department, Anna University",
     "Profiles of faculty members in the computer science department of anna university.",
     "faculty, anna university, cse",
     "Faculty members of the computer science department at anna university work on databases, "
     "networks and machine learning. The faculty list below includes each professor and the "
     "research group they lead within the department."),
    ("r03-faculty-directory", "http://annauniv.example/faculty-directory",
     "Faculty Directory - Anna University",
     "Directory of faculty and people across all departments of anna university.",
     "faculty, directory, anna university",
     "The faculty directory of anna university covers every department and school. Search for "
     "people by name, department or designation. Each faculty entry lists the professor's room, "
     "phone extension and email address at anna university."),
    ("r04-cse-professors", "http://cs.annauniv.example/professors",
     "Professors and Faculty - Anna University CSE",
     "Professors, readers and faculty of the cse department, anna university.",
     "professor, faculty, anna university",
     "Professors of the computer science department of anna university are listed with their "
     "fields of specialisation. The faculty of the department includes twelve professors and "
     "several assistant professors. People visiting the department can meet faculty during "
     "office hours."),
    ("r05-people", "http://annauniv.example/people",
     "People at Anna University",
     "The people of anna university: faculty, researchers and scholars.",
     "people, anna university",
     "People at anna university include faculty across engineering and technology departments, "
     "research scholars and visiting professors. This page introduces the people who make the "
     "university community and links to each faculty profile."),
    ("r06-it-faculty", "http://it.annauniv.example/faculty",
     "Faculty - Information Technology Department, Anna University",
     "Faculty of the information technology department at anna university.",
     "faculty, information technology, anna university",
     "The information technology department of anna university has a distinguished faculty. "
     "Each faculty member guides postgraduate projects, and several professors hold patents. "
     "The department works closely with the computer science people on joint courses."),
    ("r07-deans", "http://annauniv.example/deans",
     "Deans and Faculty Heads - Anna University",
     "Deans, heads and senior faculty people of anna university.",
     "dean, faculty, anna university",
     "The deans of anna university chair the faculty boards of their campuses. Senior faculty "
     "people serve as heads of departments. The dean of the college of engineering convenes "
     "the faculty council of anna university each semester."),
    ("r08-faculty-profiles", "http://cs.annauniv.example/faculty/profiles",
     "Faculty Profiles - Computer Science, Anna University",
     "Research profiles of the computer science faculty at anna university.",
     "faculty, profiles, anna university, computer science",
     "Read the research profile of each faculty member of the computer science department of "
     "anna university. Profiles summarise the professor's publications, funded projects and the "
     "doctoral people they supervise at anna university."),
    ("r09-people-directory", "http://annauniv.example/directory/people",
     "People Directory - Anna University Chennai",
     "Find people and faculty at anna university, chennai.",
     "people, directory, anna university, chennai",
     "The people directory of anna university chennai lists faculty, officers and research "
     "scholars. Filter people by department to find the faculty member you need. The directory "
     "is maintained by the registrar of anna university."),
    ("r10-maths-faculty", "http://maths.annauniv.example/faculty",
     "Faculty - Department of Mathematics, Anna University",
     "Mathematics faculty and people at anna university.",
     "faculty, mathematics, anna university",
     "The department of mathematics at anna university has a faculty of twenty. Faculty members "
     "teach engineering mathematics across the university and pursue research in algebra, "
     "analysis and combinatorics. People interested in doctoral study may contact any professor."),
    ("r11-professor-list", "http://cs.annauniv.example/people/professor-list",
     "Professor List - People of CSE, Anna University",
     "Professor list of the cse department people at anna university.",
     "professor, people, cse, anna university",
     "This professor list names the people of the cse department of anna university by seniority. "
     "Each professor on the list is a full-time faculty member of anna university and supervises "
     "postgraduate people in computer science."),
    ("r12-faculty-list", "http://annauniv.example/academics/faculty-list",
     "Faculty List - Anna University Academic People",
     "Academic faculty list of anna university.",
     "faculty, list, anna university",
     "The academic faculty list of anna university is revised every year. It records each "
     "faculty member's department, designation and date of joining. People named on the list "
     "hold regular appointments at anna university."),
]

# --- distractors: teaching/staff pages with no anna/faculty/people (14) --------
DIS = [
    ("d01-staff-training", "http://trainingboard.example/staff-training",
     "Staff Training and Teaching Development Programme",
     "Programme for staff development and better teaching practice.",
     "staff, teaching, training",
     "The staff development cell organises teaching workshops every term. Staff who enrol "
     "practise modern teaching methods, and the board certifies staff who complete the "
     "teaching module."),
    ("d02-teaching-workshop", "http://training.example/teaching-workshop",
     "Teaching Workshop for Academic Staff",
     "A teaching workshop where academic staff refine classroom teaching skills.",
     "teaching, workshop, staff",
     "This teaching workshop invites academic staff from any college. Sessions cover teaching "
     "large classes, assessing coursework and mentoring junior staff. Participating staff "
     "receive teaching certificates."),
    ("d03-staff-handbook", "http://training.example/staff-handbook",
     "Staff Handbook on Teaching Duties",
     "The handbook explains teaching duties and staff responsibilities.",
     "staff, handbook, teaching",
     "Every staff member receives this handbook describing teaching loads, staff leave rules "
     "and service expectations. The teaching chapters explain how staff should prepare lesson "
     "plans and conduct assessments."),
    ("d04-teaching-awards", "http://awards.example/teaching-awards",
     "Teaching Excellence Awards for Staff",
     "Annual awards recognising staff for outstanding teaching.",
     "teaching, awards, staff",
     "The academy presents teaching excellence awards to staff nominated by learners. Award "
     "winning staff demonstrate innovative teaching and sustained commitment to classroom "
     "instruction."),
    ("d05-staff-portal", "http://portal.example/staff",
     "Staff Portal - Teaching Resources",
     "Portal where staff download teaching resources and timetables.",
     "staff, portal, teaching",
     "The staff portal gives staff access to teaching timetables, teaching material "
     "repositories and staff payroll slips. Staff log in with their employee identity card."),
    ("d06-teaching-centre", "http://centre.example/teaching",
     "Centre for Teaching and Staff Development",
     "The centre supports teaching quality and staff growth.",
     "teaching, centre, staff",
     "The centre for teaching development trains staff in curriculum design. Its staff "
     "consultants observe teaching sessions and coach staff one on one."),
    ("d07-staff-recruitment", "http://careers.example/college-staff",
     "Staff Recruitment - Teaching Positions",
     "Open teaching positions for staff.",
     "staff, recruitment, teaching",
     "The college invites applications for teaching staff positions. Recruited staff join the "
     "teaching departments after an orientation. Staff vacancies appear in the employment "
     "bulletin."),
    ("d08-teaching-quality", "http://quality.example/teaching-review",
     "Teaching Quality Review for Staff",
     "A review framework measuring teaching quality among staff.",
     "teaching, quality, staff",
     "The teaching quality review asks staff to submit teaching portfolios. Review panels of "
     "senior staff rate each portfolio and report teaching outcomes to the academic senate."),
    ("d09-staff-benefits", "http://hr.example/staff-benefits",
     "Staff Benefits and Teaching Allowances",
     "Staff benefits, including teaching allowances.",
     "staff, benefits, teaching",
     "Staff are entitled to medical cover, housing support and teaching allowances. Staff "
     "drawing teaching allowances must log classroom hours in the register."),
    ("d10-teaching-resources", "http://resources.example/teaching",
     "Teaching Resources for Staff",
     "Downloadable teaching resources prepared by experienced staff.",
     "teaching, resources, staff",
     "Browse teaching resources shared by staff: lecture templates, teaching case studies and "
     "grading rubrics. Staff may submit new teaching material for review."),
    ("d11-staff-news", "http://news.example/staff-news",
     "Staff News - Teaching Edition",
     "News for staff about teaching policy changes.",
     "staff, news, teaching",
     "This edition of the staff newsletter covers teaching policy updates, interviews with "
     "staff and a calendar of teaching seminars for staff."),
    ("d12-teaching-calendar", "http://calendar.example/teaching",
     "Teaching Calendar and Staff Rota",
     "The teaching calendar and staff duty rota.",
     "teaching, calendar, staff",
     "The teaching calendar fixes term dates, while the staff rota assigns staff to "
     "invigilation and teaching cover duties throughout the year."),
    ("d13-staff-college", "http://staffcollege.example/programmes",
     "Staff College Teaching Programmes",
     "Residential teaching programmes for staff.",
     "staff, college, teaching",
     "The staff college runs residential teaching programmes. Each cohort of staff completes "
     "teaching practicums and management case studies."),
    ("d14-teaching-survey", "http://survey.example/teaching-staff",
     "Survey of Teaching Practice Among Staff",
     "Findings from a survey of teaching practice by staff.",
     "teaching, survey, staff",
     "The survey sampled staff about teaching workloads. Most staff report teaching twelve "
     "hours weekly; the academy plans to rebalance staff duties accordingly."),
]

# --- misc university-domain pages (24) ----------------------------------------
MISC = [
    ("m01-hostel-stanford", "http://stanford.example/hostel",
     "Hostel and Dormitory Facilities - Stanford University",
     "Hostel and dormitory accommodation at stanford university.",
     "hostel, dormitory, stanford university",
     "Stanford university offers hostel and dormitory accommodation for graduate residents. "
     "Each hostel has a common room, dining hall and laundry. Dormitory fees are billed by "
     "the quarter at stanford university."),
    ("m02-fees-sastra", "http://sastra.example/fees",
     "Fee Payment Deadlines - Sastra University",
     "Fee structure and payment deadlines at sastra university.",
     "fee, payment, deadline, sastra university",
     "Sastra university publishes the fee schedule for every programme. The deadline for "
     "payment of tuition fee falls in june; a late fee applies after the deadline at sastra "
     "university."),
    ("m03-mba-iit", "http://iit.example/mba-admission",
     "M.B.A Admission - IIT",
     "Admission procedure for the m.b.a programme at iit.",
     "m.b.a, admission, iit",
     "The m.b.a admission cycle at iit opens in january. Candidates for the m.b.a course take "
     "an entrance examination followed by an interview at iit."),
    ("m04-placement-california", "http://california.example/placement",
     "Placement Cell - California University",
     "Campus placement support at california university.",
     "placement, california university",
     "The placement cell of california university coordinates campus recruitment. Placement "
     "statistics, recruiter lists and placement training schedules are published each fall."),
    ("m05-scholarship-mit", "http://mit.example/scholarships",
     "Scholarships and Financial Aid - MIT",
     "Scholarship and financial aid programmes at mit.",
     "scholarship, financial aid, mit",
     "Mit students may apply for merit scholarships and need-based financial aid. Scholarship "
     "renewals require satisfactory academic standing at mit."),
    ("m06-internship-uk", "http://careers.example/uk-internships",
     "Summer Internships in the UK",
     "Paid summer internship openings in the uk.",
     "internship, summer, uk",
     "Summer internship programmes in the uk run from june to september. An internship in the "
     "uk typically includes a stipend and housing assistance for visiting students abroad."),
    ("m07-library-madras", "http://madrasuni.example/library",
     "Library Services - Madras University",
     "Library membership and lending services at madras university.",
     "library, madras university",
     "The madras university library holds over a million volumes. Library membership is open "
     "to students and researchers of madras university; digital library access is campus wide."),
    ("m08-research-iit", "http://iit.example/research-areas",
     "Research Areas - IIT",
     "Research areas and laboratories at iit.",
     "research, iit",
     "Research areas at iit span robotics, energy systems and computational biology. Several "
     "research laboratories at iit host foreign collaborations and publish widely."),
    ("m09-associations-california", "http://california.example/associations",
     "Student Associations - California University",
     "Student associations and clubs at california university.",
     "association, student, california university",
     "Student associations at california university organise cultural festivals and technical "
     "clubs. Every association registers annually with the student affairs office of "
     "california university."),
    ("m10-campus-tagore", "http://tagore.example/campus-map",
     "Campus Map and Routes - Tagore University",
     "Campus map with routes to reach tagore university.",
     "campus, map, route, tagore university",
     "The campus map of tagore university marks lecture halls, the library and hostels. Bus "
     "routes 18 and 21 reach the tagore university campus from the railway station."),
    ("m11-anna-nagar", "http://chennai.example/anna-nagar-guide",
     "How to Reach Anna Nagar",
     "Routes, distance and directions for anna nagar, chennai.",
     "anna nagar, route, distance, chennai",
     "Anna nagar is a residential neighbourhood of chennai. Metro and bus routes connect anna "
     "nagar with the city centre; the airport is sixteen kilometres away by road."),
    ("m12-tambaram", "http://chennai.example/tambaram-guide",
     "Tambaram Area Guide",
     "Colleges, transport and landmarks near tambaram.",
     "tambaram, guide, colleges",
     "Tambaram is a southern suburb of chennai with suburban rail connections. Several colleges "
     "operate near tambaram, and express buses stop at the tambaram terminus."),
    ("m13-me-sastra", "http://sastra.example/me-course",
     "M.E Course Details - Sastra University",
     "Curriculum of the regular m.e course at sastra university.",
     "m.e, course, sastra university",
     "The regular m.e course at sastra university runs four semesters. The m.e curriculum "
     "includes a dissertation; course registration happens online at sastra university."),
    ("m14-ms-stanford", "http://stanford.example/ms-programs",
     "M.S Programs - Stanford University",
     "Graduate m.s programs offered by stanford university.",
     "m.s, program, stanford university",
     "Stanford university offers m.s programs across engineering departments. Each m.s program "
     "lists its prerequisites and unit requirements in the stanford university bulletin."),
    ("m15-committee-delhi", "http://delhi.example/board-committee",
     "Board of Committee Members - Delhi University",
     "Chairman and board of committee members of delhi university.",
     "board, committee, chairman, delhi university",
     "The board of committee members of delhi university meets quarterly. The chairman of the "
     "board presides, and committee minutes are published by delhi university."),
    ("m16-exams-madras", "http://madrasuni.example/examinations",
     "Examination Schedule - Madras University",
     "Semester examination schedule at madras university.",
     "examination, schedule, madras university",
     "Madras university conducts semester examinations in november and april. The examination "
     "schedule and hall tickets are released three weeks before the examinations."),
    ("m17-publications-iit", "http://iit.example/publications",
     "Publications by Professors - IIT",
     "Research publications authored by professors at iit.",
     "publications, professor, iit",
     "Professors at iit author several hundred publications yearly. The publications repository "
     "indexes journal papers and conference proceedings by department and professor."),
    ("m18-correspondence-mit", "http://mit.example/correspondence",
     "Correspondence Students Information - MIT",
     "Programme information for correspondence students of mit.",
     "correspondence, students, mit",
     "Correspondence students of mit receive study material by post and attend contact classes "
     "twice a year. The correspondence programme office answers student queries by email."),
    ("m19-chairman-sastra", "http://sastra.example/chairman",
     "Chairman's Office - Sastra University",
     "The office of the chairman of sastra university.",
     "chairman, sastra university",
     "The chairman of sastra university leads the governing council. The chairman's office "
     "receives visitors on weekdays and coordinates council business for sastra university."),
    ("m20-lastdate-stanford", "http://stanford.example/ms-deadline",
     "Last Date to Apply for M.S - Stanford University",
     "Application deadline and last date for m.s admission at stanford university.",
     "last date, deadline, m.s, stanford university",
     "The last date to apply for the m.s programme at stanford university is december first. "
     "Late applications after the deadline are not considered by stanford university."),
    ("m21-aid-uk", "http://grants.example/uk-aid",
     "Financial Aid for Summer Internships in UK",
     "Financial aid offered for summer internships in the uk.",
     "financial aid, internship, uk",
     "Financial aid is offered for summer internships in the uk through several trusts. The aid "
     "covers travel and a living stipend for interns placed in the uk."),
    ("m22-colleges-tambaram", "http://chennai.example/colleges-near-tambaram",
     "Colleges Located Near Tambaram",
     "A list of colleges located near by tambaram for regular courses.",
     "colleges, tambaram",
     "Several colleges are located near tambaram offering regular m.e and arts courses. The "
     "colleges near tambaram are reachable by suburban train and bus."),
    ("m23-hostel-delhi", "http://delhi.example/hostel-facilities",
     "Hostel Facilities in Research Institutions - Delhi University",
     "Facilities available in research institutions and hostels of delhi university.",
     "hostel, facilities, delhi university",
     "Research institutions of delhi university provide hostel facilities for scholars. Each "
     "hostel provides a reading room, mess and internet facilities at delhi university."),
    ("m24-tagore-location", "http://tagore.example/location",
     "Location and Distance - Tagore University",
     "How far tagore university is located from the city and from anna nagar.",
     "location, distance, tagore university",
     "Tagore university is located on the northern highway. The campus is about nine kilometres "
     "from anna nagar; buses cover the distance from tagore university in thirty minutes."),
]

TEMPLATE = """<!DOCTYPE html>
<html>
<head>
<title>{title}</title>
<meta name="description" content="{description}">
<meta name="keywords" content="{keywords}">
</head>
<body>
<h1>{title}</h1>
<p>{body}</p>
</body>
</html>
"""


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = []
    for slug, url, title, description, keywords, body in REL + DIS + MISC:
        filename = f"{slug}.html"
        (OUT / filename).write_text(
            TEMPLATE.format(title=title, description=description, keywords=keywords, body=body),
            encoding="utf-8",
        )
        manifest.append({"url": url, "title": title, "file": filename})
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(manifest)} documents to {OUT}")


if __name__ == "__main__":
    main()
